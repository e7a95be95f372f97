#pragma once

#include "cohen/abelian.hpp"
#include "cohen/cohen_presentation.hpp"
#include "cohen/coset_enumeration.hpp"
#include "cohen/errors.hpp"
#include "cohen/extension.hpp"
#include "cohen/finite_group.hpp"
#include "cohen/group_ring.hpp"
#include "cohen/homomorphisms.hpp"
#include "cohen/integer_matrix.hpp"
#include "cohen/presentation.hpp"
#include "cohen/search.hpp"
#include "cohen/targets.hpp"
#include "cohen/whitehead.hpp"
#include "cohen/word.hpp"
