#pragma once

#include <optional>
#include <vector>

#include "cohen/integer_matrix.hpp"
#include "cohen/presentation.hpp"

namespace cohen {

// Abelian invariants Z^free_rank x Z/t1 x ... x Z/tk with 1 < t1 | t2 | ... .
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  std::optional<Integer> order() const {
    if (free_rank != 0) return std::nullopt;
    Integer n = 1;
    for (const auto& t : torsion) n *= t;
    return n;
  }

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Exponent-sum matrix: one row per relator, one column per generator.
inline IntMatrix relation_matrix(const GroupPresentation& p) {
  IntMatrix m(p.relators.size(), p.num_generators());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    auto sums = p.relators[r].exponent_sums(p.num_generators());
    for (std::size_t g = 0; g < sums.size(); ++g) m(r, g) = sums[g];
  }
  return m;
}

inline AbelianInvariants abelianisation(const GroupPresentation& p) {
  AbelianInvariants inv;
  auto diag = smith_diagonal(relation_matrix(p));
  std::size_t rank = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++rank;
    if (d != 1) inv.torsion.push_back(d);
  }
  inv.free_rank = p.num_generators() - rank;
  return inv;
}

}  // namespace cohen
