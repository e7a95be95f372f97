#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "cohen/finite_group.hpp"
#include "cohen/presentation.hpp"

namespace cohen {

// Complete coset table of the trivial subgroup: row c, column 2g (resp.
// 2g+1) holds c*g (resp. c*g^-1). Coset 0 is the identity.
struct CosetTable {
  std::size_t num_generators = 0;
  std::size_t size = 0;
  std::vector<std::uint32_t> entries;

  std::uint32_t act(std::size_t coset, std::size_t column) const {
    return entries[coset * 2 * num_generators + column];
  }
};

struct Exceeded {
  std::size_t cosets_defined = 0;
};

struct EnumerationResult {
  std::optional<CosetTable> table;  // empty when the budget ran out
  std::size_t cosets_defined = 0;

  bool closed() const noexcept { return table.has_value(); }
  std::size_t order() const { return table->size; }
};

namespace detail {

// HLT strategy with lookahead. When the table is full, every live coset is
// scanned against every relator without making definitions, coincidences
// are processed and the table is compacted. Enumeration gives up when a
// lookahead frees less than 1/32 of the working space.
class ToddCoxeter {
 public:
  static constexpr std::int32_t kUndefined = -1;

  ToddCoxeter(const GroupPresentation& p, std::size_t max_cosets)
      : cols_(2 * p.num_generators()), capacity_(std::max<std::size_t>(max_cosets, 1)) {
    for (const auto& r : p.relators) {
      auto cols = r.columns();
      if (!cols.empty()) relators_.push_back(std::move(cols));
    }
    table_.assign(capacity_ * cols_, kUndefined);
    forward_.assign(capacity_, 0);
    forward_[0] = 0;
    defined_ = 1;
    total_defined_ = 1;
  }

  EnumerationResult run() {
    std::size_t c = 0;
    while (c < defined_) {
      if (!alive(c)) {
        ++c;
        continue;
      }
      if (!process(c)) {
        auto next = make_room(c);
        if (!next) return {std::nullopt, total_defined_};
        c = *next;
        continue;
      }
      ++c;
    }
    compact();
    CosetTable t;
    t.num_generators = cols_ / 2;
    t.size = defined_;
    t.entries.reserve(defined_ * cols_);
    for (std::size_t i = 0; i < defined_ * cols_; ++i) {
      if (table_[i] == kUndefined) throw std::logic_error("coset table incomplete after closing");
      t.entries.push_back(static_cast<std::uint32_t>(table_[i]));
    }
    return {std::move(t), total_defined_};
  }

 private:
  static std::size_t inv(std::size_t col) { return col ^ 1u; }
  bool alive(std::size_t c) const { return forward_[c] == static_cast<std::int32_t>(c); }
  std::int32_t& at(std::size_t c, std::size_t col) { return table_[c * cols_ + col]; }

  // Closes every relator at c and fills its row. False when out of space.
  bool process(std::size_t c) {
    for (const auto& r : relators_) {
      if (!scan_and_fill(c, r)) return false;
      if (!alive(c)) return true;
    }
    for (std::size_t col = 0; col < cols_; ++col)
      if (at(c, col) == kUndefined && !define(c, col)) return false;
    return true;
  }

  bool define(std::size_t c, std::size_t col) {
    if (defined_ == capacity_) return false;
    std::size_t d = defined_++;
    ++total_defined_;
    forward_[d] = static_cast<std::int32_t>(d);
    std::fill_n(table_.begin() + static_cast<std::ptrdiff_t>(d * cols_), cols_, kUndefined);
    at(c, col) = static_cast<std::int32_t>(d);
    at(d, inv(col)) = static_cast<std::int32_t>(c);
    return true;
  }

  bool scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    std::int32_t f = static_cast<std::int32_t>(c);
    std::int32_t b = f;
    std::size_t i = 0;
    std::size_t j = w.size();  // unscanned letters are w[i..j)
    for (;;) {
      while (i < j && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j > i && at(b, inv(w[j - 1])) != kUndefined) b = at(b, inv(w[--j]));
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, inv(w[i])) = f;
        return true;
      }
      if (!define(static_cast<std::size_t>(f), w[i])) return false;
    }
  }

  // Scan without definitions; deductions and coincidences only.
  void scan(std::size_t c, const std::vector<std::size_t>& w) {
    std::int32_t f = static_cast<std::int32_t>(c);
    std::int32_t b = f;
    std::size_t i = 0;
    std::size_t j = w.size();
    while (i < j && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
    if (i == j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j > i && at(b, inv(w[j - 1])) != kUndefined) b = at(b, inv(w[--j]));
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      at(f, w[i]) = b;
      at(b, inv(w[i])) = f;
    }
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[c] != r) {
      std::int32_t next = forward_[c];
      forward_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      std::int32_t g = queue_[q];
      for (std::size_t col = 0; col < cols_; ++col) {
        std::int32_t d = at(g, col);
        if (d == kUndefined) continue;
        at(d, inv(col)) = kUndefined;
        std::int32_t mu = rep(g);
        std::int32_t nu = rep(d);
        if (at(mu, col) != kUndefined) {
          merge(nu, at(mu, col));
        } else if (at(nu, inv(col)) != kUndefined) {
          merge(mu, at(nu, inv(col)));
        } else {
          at(mu, col) = nu;
          at(nu, inv(col)) = mu;
        }
      }
    }
  }

  // Lookahead plus compaction. Returns where to resume, or nothing when the
  // budget is exhausted.
  std::optional<std::size_t> make_room(std::size_t resume) {
    for (std::size_t d = 0; d < defined_; ++d) {
      for (const auto& r : relators_) {
        if (!alive(d)) break;
        scan(d, r);
      }
    }
    std::size_t new_resume = 0;
    for (std::size_t d = 0; d < resume && d < defined_; ++d)
      if (alive(d)) ++new_resume;
    std::size_t before = defined_;
    compact();
    std::size_t freed = before - defined_;
    if (freed == 0 || freed * 32 < capacity_) return std::nullopt;
    return new_resume;
  }

  void compact() {
    std::vector<std::int32_t> renumber(defined_, kUndefined);
    std::size_t live = 0;
    for (std::size_t d = 0; d < defined_; ++d)
      if (alive(d)) renumber[d] = static_cast<std::int32_t>(live++);
    for (std::size_t d = 0; d < defined_; ++d) {
      if (renumber[d] == kUndefined) continue;
      std::size_t to = static_cast<std::size_t>(renumber[d]);
      for (std::size_t col = 0; col < cols_; ++col) {
        std::int32_t v = at(d, col);
        table_[to * cols_ + col] = v == kUndefined ? kUndefined : renumber[static_cast<std::size_t>(v)];
      }
    }
    defined_ = live;
    for (std::size_t d = 0; d < defined_; ++d) forward_[d] = static_cast<std::int32_t>(d);
  }

  std::size_t cols_;
  std::size_t capacity_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> forward_;
  std::vector<std::int32_t> queue_;
  std::size_t defined_ = 0;
  std::size_t total_defined_ = 0;
};

}  // namespace detail

// Enumerates the cosets of the trivial subgroup with at most `max_cosets`
// cosets alive at once. Deterministic for fixed input.
inline EnumerationResult enumerate_cosets(const GroupPresentation& p, std::size_t max_cosets) {
  p.validate();
  return detail::ToddCoxeter(p, max_cosets).run();
}

// The group's multiplication table in canonical order, or Exceeded.
inline std::variant<FiniteGroupTable, Exceeded> coset_enumerate(const GroupPresentation& p,
                                                                std::size_t max_cosets) {
  auto result = enumerate_cosets(p, max_cosets);
  if (!result.closed()) return Exceeded{result.cosets_defined};
  const CosetTable& t = *result.table;
  std::vector<std::vector<Element>> action(p.num_generators(), std::vector<Element>(t.size));
  for (std::size_t g = 0; g < p.num_generators(); ++g)
    for (std::size_t c = 0; c < t.size; ++c) action[g][c] = t.act(c, 2 * g);
  return FiniteGroupTable::from_right_action(p.generators, action, 0);
}

}  // namespace cohen
