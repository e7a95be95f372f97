#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cohen/errors.hpp"
#include "cohen/finite_group.hpp"
#include "cohen/integer_matrix.hpp"

namespace cohen {

namespace detail {

inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace detail

// An element of the integral group ring Z[G] for a finite group G, stored
// as a dense coefficient vector in the table's canonical element order.
class GroupRingElement {
 public:
  explicit GroupRingElement(GroupPtr group)
      : group_(std::move(group)), coeffs_(group_->order()) {}

  GroupRingElement(GroupPtr group, std::vector<Integer> coeffs)
      : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_->order())
      throw ValidationError("coefficient vector length differs from the group order");
  }

  static GroupRingElement zero(GroupPtr g) { return GroupRingElement(std::move(g)); }

  static GroupRingElement basis(GroupPtr g, Element e, Integer coeff = 1) {
    GroupRingElement x(std::move(g));
    x.coeffs_.at(e) = std::move(coeff);
    return x;
  }

  static GroupRingElement one(GroupPtr g) { return basis(std::move(g), FiniteGroupTable::identity()); }

  const GroupPtr& group() const noexcept { return group_; }
  const FiniteGroupTable& table() const noexcept { return *group_; }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  const Integer& operator[](Element e) const { return coeffs_.at(e); }
  Integer& operator[](Element e) { return coeffs_.at(e); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  GroupRingElement& operator+=(const GroupRingElement& b) {
    check(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& b) {
    check(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }

  friend GroupRingElement operator-(GroupRingElement a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  // Convolution: (ab)_h = sum over g g' = h of a_g b_g'.
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    a.check(b);
    const auto& t = *a.group_;
    GroupRingElement out(a.group_);
    for (Element g = 0; g < t.order(); ++g) {
      if (a.coeffs_[g] == 0) continue;
      for (Element h = 0; h < t.order(); ++h) {
        if (b.coeffs_[h] == 0) continue;
        out.coeffs_[t.mul(g, h)] += a.coeffs_[g] * b.coeffs_[h];
      }
    }
    return out;
  }

  friend GroupRingElement operator*(const Integer& k, GroupRingElement a) {
    for (auto& c : a.coeffs_) c *= k;
    return a;
  }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return detail::same_group(a.group_, b.group_) && a.coeffs_ == b.coeffs_;
  }

  // e.g. "-1 + g - 2 h g^2"; terms in canonical element order.
  std::string to_string() const {
    std::string out;
    for (Element e = 0; e < coeffs_.size(); ++e) {
      const Integer& c = coeffs_[e];
      if (c == 0) continue;
      Integer mag = c < 0 ? Integer(-c) : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      std::string name = e == 0 ? "" : group_->element_name(e);
      if (name.empty())
        out += mag.str();
      else
        out += (mag == 1 ? "" : mag.str() + " ") + name;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check(const GroupRingElement& b) const {
    if (!detail::same_group(group_, b.group_)) throw GroupMismatch();
  }

  GroupPtr group_;
  std::vector<Integer> coeffs_;
};

// Ring map Z[G] -> Z sending every group element to 1.
inline Integer augmentation(const GroupRingElement& a) {
  Integer s = 0;
  for (const auto& c : a.coefficients()) s += c;
  return s;
}

// sum a_g g  ->  sum a_g g^-1 (trivial orientation character).
inline GroupRingElement involution(const GroupRingElement& a) {
  GroupRingElement out(a.group());
  for (Element g = 0; g < a.table().order(); ++g) out[a.table().inverse(g)] = a[g];
  return out;
}

// Left multiplication by `a` on Z[G]: column g holds the coefficients of a*g.
inline IntMatrix regular_representation(const GroupRingElement& a) {
  const auto& t = a.table();
  IntMatrix m(t.order(), t.order());
  for (Element g = 0; g < t.order(); ++g)
    for (Element h = 0; h < t.order(); ++h)
      if (a[h] != 0) m(t.mul(h, g), g) = a[h];
  return m;
}

// a is a unit iff det rho(a) = +-1.
inline bool is_unit(const GroupRingElement& a) {
  Integer d = determinant(regular_representation(a));
  return d == 1 || d == -1;
}

// Square matrix over Z[G], row-major.
class GroupRingMatrix {
 public:
  GroupRingMatrix(GroupPtr group, std::size_t n)
      : group_(std::move(group)), n_(n), entries_(n * n, GroupRingElement(group_)) {}

  GroupRingMatrix(GroupPtr group, std::size_t n, std::vector<GroupRingElement> entries)
      : group_(std::move(group)), n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_) throw ValidationError("matrix needs n*n entries");
    for (const auto& e : entries_)
      if (!detail::same_group(e.group(), group_)) throw GroupMismatch();
  }

  static GroupRingMatrix identity(GroupPtr group, std::size_t n) {
    GroupRingMatrix m(std::move(group), n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GroupRingElement::one(m.group_);
    return m;
  }

  static GroupRingMatrix scalar(const GroupRingElement& u) {
    return GroupRingMatrix(u.group(), 1, {u});
  }

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return n_; }
  GroupRingElement& operator()(std::size_t i, std::size_t j) { return entries_.at(i * n_ + j); }
  const GroupRingElement& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }

  friend GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b) {
    if (!detail::same_group(a.group_, b.group_)) throw GroupMismatch();
    if (a.n_ != b.n_) throw ValidationError("matrix sizes differ");
    GroupRingMatrix out(a.group_, a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < a.n_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend GroupRingMatrix operator+(GroupRingMatrix a, const GroupRingMatrix& b) {
    if (a.n_ != b.n_) throw ValidationError("matrix sizes differ");
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] += b.entries_[i];
    return a;
  }

  friend bool operator==(const GroupRingMatrix& a, const GroupRingMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  GroupRingMatrix transpose() const {
    GroupRingMatrix out(group_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  // diag(X, 1)
  GroupRingMatrix stabilized() const {
    GroupRingMatrix out(group_, n_ + 1);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(i, j);
    out(n_, n_) = GroupRingElement::one(group_);
    return out;
  }

 private:
  GroupPtr group_;
  std::size_t n_;
  std::vector<GroupRingElement> entries_;
};

// Conjugate transpose: transpose, then the involution entrywise.
inline GroupRingMatrix matrix_involution(const GroupRingMatrix& x) {
  GroupRingMatrix out(x.group(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out(j, i) = involution(x(i, j));
  return out;
}

// Block matrix of regular representations, (n|G|) x (n|G|).
inline IntMatrix matrix_rep(const GroupRingMatrix& x) {
  const std::size_t order = x.group()->order();
  IntMatrix m(x.size() * order, x.size() * order);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x(i, j).is_zero()) continue;
      IntMatrix block = regular_representation(x(i, j));
      for (std::size_t r = 0; r < order; ++r)
        for (std::size_t c = 0; c < order; ++c) m(i * order + r, j * order + c) = block(r, c);
    }
  return m;
}

// Entrywise augmentation, an integer n x n matrix.
inline IntMatrix augmented(const GroupRingMatrix& x) {
  IntMatrix m(x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) m(i, j) = augmentation(x(i, j));
  return m;
}

inline bool is_invertible(const GroupRingMatrix& x) {
  Integer d = determinant(matrix_rep(x));
  return d == 1 || d == -1;
}

// Inverse over Z[G]. The integer inverse of matrix_rep(X) commutes with the
// right regular action, so each block is rho(b) for the b read off its
// identity column.
inline GroupRingMatrix invert(const GroupRingMatrix& x) {
  if (!is_invertible(x)) throw NotInvertible();
  auto inv = integer_inverse(matrix_rep(x));
  if (!inv) throw NotInvertible();
  const std::size_t order = x.group()->order();
  GroupRingMatrix out(x.group(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) {
      std::vector<Integer> coeffs(order);
      for (std::size_t r = 0; r < order; ++r) coeffs[r] = (*inv)(i * order + r, j * order);
      GroupRingElement b(x.group(), std::move(coeffs));
      IntMatrix block = regular_representation(b);
      for (std::size_t r = 0; r < order; ++r)
        for (std::size_t c = 0; c < order; ++c)
          if (block(r, c) != (*inv)(i * order + r, j * order + c))
            throw std::logic_error("inverse block is not a regular representation");
      out(i, j) = std::move(b);
    }
  return out;
}

inline GroupRingElement unit_inverse(const GroupRingElement& u) {
  return invert(GroupRingMatrix::scalar(u))(0, 0);
}

}  // namespace cohen
