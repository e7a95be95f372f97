#pragma once

// Test-only reference computations. These deliberately avoid the library's
// determinant, inverse, Smith form and backtracking code paths.

#include <algorithm>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cohen/finite_group.hpp"
#include "cohen/group_ring.hpp"
#include "cohen/presentation.hpp"

namespace cohen::oracle {

using Rational = boost::multiprecision::cpp_rational;

// Solves A v = b over Q by Gaussian elimination with rational pivots.
inline std::optional<std::vector<Rational>> rational_solve(const IntMatrix& a, const std::vector<Integer>& b) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
    m[i][n] = Rational(b[i]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[k], m[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = m[i][n] / m[i][i];
  return v;
}

// a is a unit iff rho(a) v = e_0 has an integral solution: v is then the
// coefficient vector of a right inverse, which in a finite group ring is
// two-sided.
inline bool is_unit_by_rational_solve(const GroupRingElement& a) {
  IntMatrix rho(a.table().order(), a.table().order());
  const auto& t = a.table();
  for (Element g = 0; g < t.order(); ++g)
    for (Element h = 0; h < t.order(); ++h) rho(t.mul(h, g), g) += a[h];
  std::vector<Integer> e0(t.order(), 0);
  e0[0] = 1;
  auto v = rational_solve(rho, e0);
  if (!v) return false;
  for (const auto& x : *v)
    if (denominator(x) != 1) return false;
  return true;
}

// Number of homomorphisms by enumerating every tuple of generator images.
inline std::size_t count_homomorphisms(const GroupPresentation& p, const FiniteGroupTable& target) {
  const std::size_t k = p.num_generators();
  std::vector<Element> images(k, 0);
  std::size_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& r : p.relators) {
      Element v = 0;
      for (const auto& l : r.letters()) {
        Element x = l.exponent > 0 ? images[l.generator] : target.inverse(images[l.generator]);
        for (std::int64_t e = 0; e < (l.exponent > 0 ? l.exponent : -l.exponent); ++e) v = target.mul(v, x);
      }
      if (v != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t d = 0;
    while (d < k && ++images[d] == target.order()) images[d++] = 0;
    if (d == k) return count;
  }
}

// Determinant by the Leibniz expansion over all permutations; tiny
// matrices only.
inline Integer leibniz_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Integer total = 0;
  do {
    Integer term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    total += inversions % 2 ? Integer(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace cohen::oracle
