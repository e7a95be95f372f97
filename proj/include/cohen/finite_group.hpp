#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "cohen/errors.hpp"
#include "cohen/word.hpp"

namespace cohen {

using Element = std::uint32_t;

// Largest group for which a full multiplication table is materialised.
inline constexpr std::size_t kMaxTableOrder = 4096;

// A finite group as a multiplication table. Element 0 is the identity and
// the remaining elements are numbered in breadth-first order over the
// Cayley graph, visiting generators in declaration order and then their
// inverses. canonical_word(e) is the BFS path to e, hence a shortest word.
class FiniteGroupTable {
 public:
  // `right_action[s][p]` is the point reached from p by right multiplication
  // with generator s. The action must be regular; `identity` names the point
  // playing the identity. Points are renumbered into canonical order.
  static FiniteGroupTable from_right_action(std::vector<std::string> generator_names,
                                            const std::vector<std::vector<Element>>& right_action,
                                            Element identity) {
    const std::size_t ngens = generator_names.size();
    if (right_action.size() != ngens)
      throw ValidationError("one action per generator is required");
    const std::size_t npoints = ngens == 0 ? 1 : right_action.front().size();
    if (npoints > kMaxTableOrder)
      throw ValidationError("group of order " + std::to_string(npoints) +
                            " exceeds the table limit of " + std::to_string(kMaxTableOrder));

    // Inverse actions, so that steps can follow g^-1 as well.
    std::vector<std::vector<Element>> steps(2 * ngens, std::vector<Element>(npoints));
    for (std::size_t s = 0; s < ngens; ++s) {
      if (right_action[s].size() != npoints) throw ValidationError("ragged action");
      for (std::size_t p = 0; p < npoints; ++p) {
        steps[s][p] = right_action[s][p];
        steps[ngens + s][right_action[s][p]] = static_cast<Element>(p);
      }
    }
    auto step_letter = [ngens](std::size_t s) {
      return s < ngens ? FreeWord::generator(s, 1) : FreeWord::generator(s - ngens, -1);
    };

    constexpr Element kUnseen = ~Element{0};
    std::vector<Element> new_index(npoints, kUnseen);
    std::vector<Element> order_of_points{identity};
    std::vector<std::pair<Element, std::size_t>> parent{{0, 0}};  // (parent new index, step)
    new_index[identity] = 0;
    for (std::size_t head = 0; head < order_of_points.size(); ++head) {
      Element p = order_of_points[head];
      for (std::size_t s = 0; s < 2 * ngens; ++s) {
        Element q = steps[s][p];
        if (new_index[q] != kUnseen) continue;
        new_index[q] = static_cast<Element>(order_of_points.size());
        order_of_points.push_back(q);
        parent.emplace_back(static_cast<Element>(head), s);
      }
    }
    if (order_of_points.size() != npoints)
      throw ValidationError("generators do not act transitively");

    FiniteGroupTable t;
    t.names_ = std::move(generator_names);
    t.order_ = npoints;
    t.words_.resize(npoints);
    for (std::size_t e = 1; e < npoints; ++e)
      t.words_[e] = t.words_[parent[e].first] * step_letter(parent[e].second);

    // Right action in canonical numbering.
    std::vector<std::vector<Element>> act(2 * ngens, std::vector<Element>(npoints));
    for (std::size_t s = 0; s < 2 * ngens; ++s)
      for (std::size_t p = 0; p < npoints; ++p)
        act[s][new_index[p]] = new_index[steps[s][p]];

    // a*b follows the BFS path of b from a: a*b = (a*parent(b)) * step.
    t.mult_.assign(npoints * npoints, 0);
    for (std::size_t a = 0; a < npoints; ++a) {
      t.mult_[a * npoints] = static_cast<Element>(a);
      for (std::size_t b = 1; b < npoints; ++b) {
        auto [pb, s] = parent[b];
        t.mult_[a * npoints + b] = act[s][t.mult_[a * npoints + pb]];
      }
    }
    t.finish();
    for (std::size_t s = 0; s < ngens; ++s) t.gens_.push_back(act[s][0]);
    return t;
  }

  // Permutation group generated by `perms` (images of 0..d-1). Elements are
  // composed left to right: (p*q)(i) = q(p(i)).
  static FiniteGroupTable from_permutations(std::vector<std::string> generator_names,
                                            const std::vector<std::vector<std::uint32_t>>& perms) {
    using Perm = std::vector<std::uint32_t>;
    const std::size_t degree = perms.empty() ? 0 : perms.front().size();
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0u);
    std::map<Perm, Element> index{{id, 0}};
    std::vector<Perm> elements{id};
    std::vector<std::vector<Element>> action(perms.size());
    for (std::size_t head = 0; head < elements.size(); ++head) {
      for (std::size_t s = 0; s < perms.size(); ++s) {
        if (perms[s].size() != degree) throw ValidationError("permutations of unequal degree");
        Perm q(degree);
        for (std::size_t i = 0; i < degree; ++i) q[i] = perms[s][elements[head][i]];
        auto [it, inserted] = index.emplace(q, static_cast<Element>(elements.size()));
        if (inserted) {
          if (elements.size() >= kMaxTableOrder) throw ValidationError("permutation group too large");
          elements.push_back(std::move(q));
        }
        action[s].push_back(it->second);
      }
    }
    return from_right_action(std::move(generator_names), action, 0);
  }

  // Rebuilds a table from serialised parts and checks every invariant.
  static FiniteGroupTable from_parts(std::vector<std::string> generator_names,
                                     std::vector<Element> mult, std::vector<Element> generator_images,
                                     std::vector<FreeWord> canonical_words) {
    FiniteGroupTable t;
    t.names_ = std::move(generator_names);
    t.order_ = canonical_words.size();
    if (t.order_ == 0 || mult.size() != t.order_ * t.order_)
      throw ValidationError("multiplication table has the wrong size");
    for (auto v : mult)
      if (v >= t.order_) throw ValidationError("multiplication table entry out of range");
    if (generator_images.size() != t.names_.size())
      throw ValidationError("one generator image per generator is required");
    for (auto v : generator_images)
      if (v >= t.order_) throw ValidationError("generator image out of range");
    t.mult_ = std::move(mult);
    t.gens_ = std::move(generator_images);
    t.words_ = std::move(canonical_words);
    t.finish();
    if (!t.verify_group_laws()) throw ValidationError("table is not a group law");
    for (std::size_t e = 0; e < t.order_; ++e)
      if (t.evaluate(t.words_[e]) != e)
        throw ValidationError("canonical word of element " + std::to_string(e) + " is wrong");
    return t;
  }

  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  std::size_t num_generators() const noexcept { return names_.size(); }

  Element mul(Element a, Element b) const { return mult_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element generator_image(std::size_t i) const { return gens_.at(i); }
  const std::vector<Element>& generator_images() const noexcept { return gens_; }
  const FreeWord& canonical_word(Element e) const { return words_.at(e); }
  const std::vector<Element>& table() const noexcept { return mult_; }

  Element power(Element a, std::int64_t k) const {
    Element base = k < 0 ? inverse(a) : a;
    Element r = identity();
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) r = mul(r, base);
    return r;
  }

  std::size_t element_order(Element a) const {
    std::size_t n = 1;
    for (Element x = a; x != identity(); x = mul(x, a)) ++n;
    return n;
  }

  // Evaluates a word in this group's generators.
  Element evaluate(const FreeWord& w) const {
    Element r = identity();
    for (const auto& l : w.letters()) {
      if (l.generator >= gens_.size())
        throw ValidationError("word uses generator index " + std::to_string(l.generator) +
                              " but the group has " + std::to_string(gens_.size()) + " generators");
      r = mul(r, power(gens_[l.generator], l.exponent));
    }
    return r;
  }

  std::string element_name(Element e) const {
    auto s = format_word(words_.at(e), names_);
    return s.empty() ? "e" : s;
  }

  bool verify_group_laws() const {
    for (Element a = 0; a < order_; ++a) {
      if (mul(0, a) != a || mul(a, 0) != a) return false;
      if (mul(a, inverse_[a]) != 0 || mul(inverse_[a], a) != 0) return false;
    }
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b)
        for (Element c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    return true;
  }

  friend bool operator==(const FiniteGroupTable& a, const FiniteGroupTable& b) {
    return a.order_ == b.order_ && a.mult_ == b.mult_ && a.gens_ == b.gens_ &&
           a.names_ == b.names_;
  }

 private:
  FiniteGroupTable() = default;

  void finish() {
    inverse_.assign(order_, 0);
    std::vector<bool> found(order_, false);
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b)
        if (mul(a, b) == 0) {
          inverse_[a] = b;
          found[a] = true;
          break;
        }
    for (bool f : found)
      if (!f) throw ValidationError("element without inverse");
  }

  std::vector<std::string> names_;
  std::size_t order_ = 0;
  std::vector<Element> mult_;
  std::vector<Element> inverse_;
  std::vector<Element> gens_;
  std::vector<FreeWord> words_;
};

using GroupPtr = std::shared_ptr<const FiniteGroupTable>;

inline GroupPtr share(FiniteGroupTable t) {
  return std::make_shared<const FiniteGroupTable>(std::move(t));
}

}  // namespace cohen
