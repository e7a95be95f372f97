#pragma once

#include <random>
#include <string>
#include <vector>

#include "cohen/cohen.hpp"

namespace cohen::testing {

inline BaseGroup base(std::vector<std::string> gens, const std::vector<std::string>& rels) {
  return BaseGroup::from_presentation(GroupPresentation::parse(std::move(gens), rels));
}

inline BaseGroup cyclic(int n) { return base({"g"}, {"g^" + std::to_string(n)}); }
inline BaseGroup d10() { return base({"g", "h"}, {"g^5", "h^2", "h g h g"}); }
inline BaseGroup s3() { return base({"a", "b"}, {"a^2", "b^3", "a b a b"}); }
inline BaseGroup klein() { return base({"a", "b"}, {"a^2", "b^2", "a b a^-1 b^-1"}); }
inline BaseGroup q8() { return base({"i", "j"}, {"i^4", "i^2 j^-2", "j i j^-1 i"}); }
inline BaseGroup d8() { return base({"r", "s"}, {"r^4", "s^2", "s r s r"}); }
inline BaseGroup trivial_group() { return base({}, {}); }

// Every group of order <= 10, up to isomorphism.
inline std::vector<BaseGroup> small_groups() {
  std::vector<BaseGroup> out;
  for (int n = 1; n <= 10; ++n) out.push_back(cyclic(n));
  out.push_back(klein());
  out.push_back(s3());
  out.push_back(d8());
  out.push_back(q8());
  out.push_back(base({"a", "b"}, {"a^2", "b^4", "a b a^-1 b^-1"}));  // C2 x C4
  out.push_back(base({"a", "b", "c"}, {"a^2", "b^2", "c^2", "a b a b", "a c a c", "b c b c"}));  // C2^3
  out.push_back(base({"a", "b"}, {"a^3", "b^3", "a b a^-1 b^-1"}));  // C3 x C3
  out.push_back(d10());
  return out;
}

inline Element element(const BaseGroup& g, const std::string& word) {
  return g.table->evaluate(parse_word(word, g.presentation.generators));
}

// Parses "-1 + g - 2 h g^2"-style sums of terms "[k] word".
inline GroupRingElement ring(const BaseGroup& g, const std::vector<std::pair<long, std::string>>& terms) {
  GroupRingElement x(g.table);
  for (const auto& [c, w] : terms) x[element(g, w)] += c;
  return x;
}

// (-1 + g - g^2 + g^3 + g^4) + h (1 - 2g + g^2) in Z[D10].
inline GroupRingElement rothaus_unit(const BaseGroup& d) {
  return ring(d, {{-1, ""}, {1, "g"}, {-1, "g^2"}, {1, "g^3"}, {1, "g^4"}, {1, "h"}, {-2, "h g"}, {1, "h g^2"}});
}

inline GroupRingElement random_element(std::mt19937_64& rng, const GroupPtr& g, int bound, double density = 0.5) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::bernoulli_distribution keep(density);
  GroupRingElement x(g);
  for (Element e = 0; e < g->order(); ++e)
    if (keep(rng)) x[e] = coeff(rng);
  return x;
}

inline GroupRingMatrix random_matrix(std::mt19937_64& rng, const GroupPtr& g, std::size_t n, int bound) {
  GroupRingMatrix m(g, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_element(rng, g, bound);
  return m;
}

// Random invertible matrix: a random product of elementary moves applied
// to a diagonal of trivial units, optionally seeded with a known unit.
inline GroupRingMatrix random_invertible(std::mt19937_64& rng, const GroupPtr& g, std::size_t n,
                                         std::size_t moves = 4,
                                         const std::optional<GroupRingElement>& unit = std::nullopt) {
  std::uniform_int_distribution<Element> elem(0, static_cast<Element>(g->order() - 1));
  std::uniform_int_distribution<std::size_t> row(0, n - 1);
  std::bernoulli_distribution coin(0.5);
  GroupRingMatrix m = GroupRingMatrix::identity(g, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GroupRingElement::basis(g, elem(rng), coin(rng) ? 1 : -1);
  if (unit) m(0, 0) = *unit * m(0, 0);
  WhiteheadCertificate c;
  for (std::size_t k = 0; k < moves; ++k) {
    if (n >= 2 && coin(rng)) {
      std::size_t i = row(rng), j = row(rng);
      if (i == j) j = (i + 1) % n;
      c.moves.push_back(moves::AddRow{i, j, random_element(rng, g, 1, 0.3)});
    } else if (n >= 2 && coin(rng)) {
      c.moves.push_back(moves::SwapRows{row(rng), row(rng)});
    } else {
      c.moves.push_back(moves::ScaleRow{row(rng), coin(rng) ? 1 : -1, elem(rng)});
    }
  }
  return apply_certificate(m, c);
}

}  // namespace cohen::testing
