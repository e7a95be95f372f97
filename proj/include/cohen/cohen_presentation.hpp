#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

#include "cohen/coset_enumeration.hpp"
#include "cohen/errors.hpp"
#include "cohen/finite_group.hpp"
#include "cohen/group_ring.hpp"
#include "cohen/presentation.hpp"
#include "cohen/whitehead.hpp"

namespace cohen {

// A finite base group: its presentation together with the enumerated table.
struct BaseGroup {
  GroupPresentation presentation;
  GroupPtr table;

  static BaseGroup from_presentation(GroupPresentation p, std::size_t max_cosets = 100'000) {
    auto result = coset_enumerate(p, max_cosets);
    if (std::holds_alternative<Exceeded>(result))
      throw ValidationError("base group did not close within " + std::to_string(max_cosets) +
                            " cosets");
    GroupPtr t = share(std::move(std::get<FiniteGroupTable>(result)));
    return {std::move(p), std::move(t)};
  }

  std::size_t order() const { return table->order(); }
};

// The factor g x_j^sign g^-1 of a relator.
struct ConjugateFactor {
  Element conjugator;
  std::size_t generator;  // 0-based index j of x_{j+1}
  int sign;

  friend bool operator==(const ConjugateFactor&, const ConjugateFactor&) = default;
};

using Relator = std::vector<ConjugateFactor>;

// Data (G, x_1..x_n, r_1..r_n) with each r_i a product of conjugates of
// the x_j^{+-1} by elements of the base group G.
struct CohenPresentation {
  BaseGroup base;
  std::vector<Relator> relators;

  std::size_t n() const noexcept { return relators.size(); }

  void validate() const {
    if (relators.empty()) throw ValidationError("a Cohen presentation needs n >= 1");
    for (std::size_t i = 0; i < relators.size(); ++i)
      for (const auto& f : relators[i]) {
        if (f.generator >= relators.size())
          throw ValidationError("relator " + std::to_string(i + 1) + " uses generator x" +
                                std::to_string(f.generator + 1) + " but n = " +
                                std::to_string(relators.size()));
        if (f.conjugator >= base.order())
          throw ValidationError("relator " + std::to_string(i + 1) + " has a conjugator out of range");
        if (f.sign != 1 && f.sign != -1)
          throw ValidationError("relator " + std::to_string(i + 1) + " has a sign other than +-1");
      }
  }

  bool is_normalized() const {
    for (std::size_t i = 0; i < relators.size(); ++i)
      if (relators[i].empty() || !(relators[i].front() == ConjugateFactor{0, i, 1})) return false;
    return true;
  }

  friend bool operator==(const CohenPresentation& a, const CohenPresentation& b) {
    return a.relators == b.relators && a.base.presentation == b.base.presentation;
  }
};

// X(P)_ij = sum of sign * conjugator over the factors of r_i involving x_j.
inline GroupRingMatrix matrix_of(const CohenPresentation& p) {
  p.validate();
  GroupRingMatrix x(p.base.table, p.n());
  for (std::size_t i = 0; i < p.n(); ++i)
    for (const auto& f : p.relators[i]) x(i, f.generator)[f.conjugator] += f.sign;
  return x;
}

inline bool is_admissible(const CohenPresentation& p) { return is_invertible(matrix_of(p)); }

// A presentation realising X exactly: entry X_ij = sum a_g g contributes
// |a_g| copies of (g, j, sign a_g) to r_i, by column then element order.
inline CohenPresentation presentation_from_matrix(const BaseGroup& base, const GroupRingMatrix& x) {
  if (!detail::same_group(base.table, x.group())) throw GroupMismatch();
  CohenPresentation p{base, std::vector<Relator>(x.size())};
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      for (Element g = 0; g < base.order(); ++g) {
        const Integer& a = x(i, j)[g];
        const int sign = a < 0 ? -1 : 1;
        for (Integer k = 0; k < (a < 0 ? Integer(-a) : a); ++k) p.relators[i].push_back({g, j, sign});
      }
  return p;
}

namespace detail {

// Perfect matching row -> column on the nonzero pattern. Each row first
// takes the smallest free column; augmenting paths are tried only when no
// free column is available.
class PatternMatching {
 public:
  explicit PatternMatching(const GroupRingMatrix& x) : x_(x), n_(x.size()), col_owner_(n_, kNone) {}

  std::optional<std::vector<std::size_t>> solve() {
    for (std::size_t r = 0; r < n_; ++r) {
      bool placed = false;
      for (std::size_t c = 0; c < n_ && !placed; ++c)
        if (col_owner_[c] == kNone && !x_(r, c).is_zero()) {
          col_owner_[c] = r;
          placed = true;
        }
      if (!placed) {
        std::vector<bool> visited(n_, false);
        placed = augment(r, visited);
      }
      if (!placed) return std::nullopt;
    }
    std::vector<std::size_t> sigma(n_);
    for (std::size_t c = 0; c < n_; ++c) sigma[col_owner_[c]] = c;
    return sigma;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool augment(std::size_t r, std::vector<bool>& visited) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (x_(r, c).is_zero() || visited[c]) continue;
      visited[c] = true;
      if (col_owner_[c] == kNone || augment(col_owner_[c], visited)) {
        col_owner_[c] = r;
        return true;
      }
    }
    return false;
  }

  const GroupRingMatrix& x_;
  std::size_t n_;
  std::vector<std::size_t> col_owner_;
};

}  // namespace detail

struct NormalizationResult {
  CohenPresentation presentation;
  // Carries matrix_of(input) to matrix_of(presentation).
  WhiteheadCertificate certificate;
};

// Brings P into the form where r_i starts with (e, x_i, +1), by permuting
// relators, cyclically rotating, conjugating by base elements and inverting.
// Each step either leaves X(P) alone or is a SwapRows / ScaleRow move.
inline NormalizationResult normalize(const CohenPresentation& p) {
  const GroupRingMatrix x = matrix_of(p);
  if (!is_invertible(x)) throw NotAdmissible();
  if (p.is_normalized()) return {p, {}};

  const auto& g = *p.base.table;
  const std::size_t n = p.n();
  NormalizationResult out{p, {}};

  // Keep relators that already match their generator on the diagonal.
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  bool diagonal_ok = true;
  for (std::size_t i = 0; i < n; ++i)
    if (x(i, i).is_zero()) diagonal_ok = false;
  if (!diagonal_ok) {
    auto matched = detail::PatternMatching(x).solve();
    if (!matched) throw NotAdmissible();
    sigma = *matched;
  }

  // Relator i moves to position sigma(i); realise this with row swaps.
  std::vector<std::size_t> at(n);  // at[k] = original relator now in row k
  std::iota(at.begin(), at.end(), std::size_t{0});
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t want = static_cast<std::size_t>(std::find(sigma.begin(), sigma.end(), t) - sigma.begin());
    std::size_t pos = static_cast<std::size_t>(std::find(at.begin(), at.end(), want) - at.begin());
    if (pos != t) {
      out.certificate.moves.push_back(moves::SwapRows{t, pos});
      std::swap(at[t], at[pos]);
    }
  }
  for (std::size_t k = 0; k < n; ++k) out.presentation.relators[k] = p.relators[at[k]];

  for (std::size_t k = 0; k < n; ++k) {
    Relator& r = out.presentation.relators[k];
    if (!r.empty() && r.front() == ConjugateFactor{0, k, 1}) continue;
    auto it = std::find_if(r.begin(), r.end(), [k](const ConjugateFactor& f) { return f.generator == k; });
    if (it == r.end()) throw NotAdmissible();  // unreachable: X(k,k) != 0
    const Element gamma = it->conjugator;
    const int delta = it->sign;

    std::rotate(r.begin(), it, r.end());
    if (gamma != FiniteGroupTable::identity()) {
      const Element gamma_inv = g.inverse(gamma);
      for (auto& f : r) f.conjugator = g.mul(gamma_inv, f.conjugator);
    }
    if (delta == -1) {
      std::reverse(r.begin(), r.end());
      for (auto& f : r) f.sign = -f.sign;
      std::rotate(r.begin(), r.end() - 1, r.end());
    }
    if (gamma != FiniteGroupTable::identity() || delta == -1)
      out.certificate.moves.push_back(moves::ScaleRow{k, delta, g.inverse(gamma)});
  }
  return out;
}

}  // namespace cohen
