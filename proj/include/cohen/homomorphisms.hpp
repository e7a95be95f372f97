#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cohen/errors.hpp"
#include "cohen/finite_group.hpp"
#include "cohen/presentation.hpp"

namespace cohen {

// Generator images, indexed like the presentation's generators.
using Homomorphism = std::vector<Element>;

inline constexpr std::uint64_t kDefaultHomSearchCap = 10'000'000;

// Size of the subgroup of `target` generated by `images`.
inline std::size_t generated_subgroup_order(const FiniteGroupTable& target,
                                            const std::vector<Element>& images) {
  std::vector<bool> seen(target.order(), false);
  std::vector<Element> queue{FiniteGroupTable::identity()};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Element s : images) {
      Element x = target.mul(queue[head], s);
      if (!seen[x]) {
        seen[x] = true;
        queue.push_back(x);
      }
    }
  }
  return queue.size();
}

namespace detail {

// Plain backtracking over generator images in index order. A relator is
// checked as soon as every generator it mentions has an image.
class HomomorphismSearch {
 public:
  HomomorphismSearch(const GroupPresentation& p, const FiniteGroupTable& target, std::uint64_t cap)
      : pres_(p), target_(target), cap_(cap), by_level_(p.num_generators()) {
    p.validate();
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      const auto bound = p.relators[r].alphabet_bound();
      if (bound == 0) continue;  // empty relator holds everywhere
      by_level_[bound - 1].push_back(r);
    }
    images_.assign(p.num_generators(), 0);
  }

  // Calls `visit` on each homomorphism in lexicographic order of images
  // until it returns false.
  void run(const std::function<bool(const Homomorphism&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    extend(0);
  }

 private:
  void extend(std::size_t level) {
    if (level == images_.size()) {
      if (!(*visit_)(images_)) stop_ = true;
      return;
    }
    for (Element x = 0; x < target_.order() && !stop_; ++x) {
      if (++visited_ > cap_) throw SearchCapExceeded(cap_);
      images_[level] = x;
      if (relators_hold(level)) extend(level + 1);
    }
  }

  bool relators_hold(std::size_t level) const {
    for (std::size_t r : by_level_[level]) {
      Element v = FiniteGroupTable::identity();
      for (const auto& l : pres_.relators[r].letters())
        v = target_.mul(v, target_.power(images_[l.generator], l.exponent));
      if (v != FiniteGroupTable::identity()) return false;
    }
    return true;
  }

  const GroupPresentation& pres_;
  const FiniteGroupTable& target_;
  std::uint64_t cap_;
  std::uint64_t visited_ = 0;
  std::vector<std::vector<std::size_t>> by_level_;
  Homomorphism images_;
  const std::function<bool(const Homomorphism&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace detail

// All homomorphisms from the presented group to `target`. Throws
// SearchCapExceeded once more than `cap` partial assignments were tried.
inline std::vector<Homomorphism> find_homomorphisms(const GroupPresentation& p,
                                                    const FiniteGroupTable& target,
                                                    std::uint64_t cap = kDefaultHomSearchCap) {
  std::vector<Homomorphism> out;
  detail::HomomorphismSearch(p, target, cap).run([&](const Homomorphism& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

// First homomorphism (lexicographically) whose image generates `target`.
inline std::optional<Homomorphism> exists_surjection(const GroupPresentation& p,
                                                     const FiniteGroupTable& target,
                                                     std::uint64_t cap = kDefaultHomSearchCap) {
  std::optional<Homomorphism> found;
  detail::HomomorphismSearch(p, target, cap).run([&](const Homomorphism& h) {
    if (generated_subgroup_order(target, h) != target.order()) return true;
    found = h;
    return false;
  });
  return found;
}

inline bool is_homomorphism(const GroupPresentation& p, const FiniteGroupTable& target,
                            const Homomorphism& images) {
  if (images.size() != p.num_generators()) return false;
  for (const auto& r : p.relators) {
    Element v = FiniteGroupTable::identity();
    for (const auto& l : r.letters()) v = target.mul(v, target.power(images[l.generator], l.exponent));
    if (v != FiniteGroupTable::identity()) return false;
  }
  return true;
}

}  // namespace cohen
