#pragma once

#include <algorithm>
#include <optional>
#include <thread>
#include <vector>

#include "cohen/cohen_presentation.hpp"
#include "cohen/extension.hpp"

namespace cohen {

enum class SignMode { Both, PositiveOnly };

struct SearchConfig {
  std::size_t n_max = 1;
  std::size_t factors_max = 3;          // cap on each relator length n(i)
  std::vector<Element> conjugators;     // empty means every base element
  SignMode signs = SignMode::Both;
  std::optional<GroupRingMatrix> matrix_filter;  // exact match on matrix_of
  bool admissible_only = false;
  std::size_t enumeration_budget = 100'000;
  std::size_t candidate_cap = 10'000'000;
  std::vector<std::string> targets = default_target_names();
  std::uint64_t hom_cap = kDefaultHomSearchCap;
  unsigned jobs = 1;

  void validate(const BaseGroup& base) const {
    if (n_max == 0 || factors_max == 0 || enumeration_budget == 0 || candidate_cap == 0 || hom_cap == 0)
      throw ValidationError("search caps must be positive");
    for (Element c : conjugators)
      if (c >= base.order()) throw ValidationError("conjugator out of range");
    if (matrix_filter && !detail::same_group(matrix_filter->group(), base.table)) throw GroupMismatch();
  }
};

// Exhaustive, deterministic stream of Cohen presentations over `base`:
// lexicographic in n, then in the tuple of relator lengths, then in the
// factor tuple. Factors are ordered by (conjugator, generator, sign) with
// + before -. With a matrix filter only n = filter size is visited.
class PresentationStream {
 public:
  PresentationStream(BaseGroup base, const SearchConfig& cfg)
      : base_(std::move(base)),
        factors_max_(cfg.factors_max),
        cap_(cfg.candidate_cap),
        signs_(cfg.signs == SignMode::Both ? 2 : 1),
        n_(cfg.matrix_filter ? cfg.matrix_filter->size() : 1),
        n_max_(cfg.matrix_filter ? cfg.matrix_filter->size() : cfg.n_max) {
    cfg.validate(base_);
    conjugators_ = cfg.conjugators;
    if (conjugators_.empty())
      for (Element e = 0; e < base_.order(); ++e) conjugators_.push_back(e);
    reset_lengths();
  }

  // Number of candidates the unbounded stream would produce.
  static Integer full_size(std::size_t conjugators, const SearchConfig& cfg, std::size_t n_min, std::size_t n_max) {
    Integer total = 0;
    for (std::size_t n = n_min; n <= n_max; ++n) {
      Integer per_relator = 0, power = 1;
      const Integer alphabet = Integer(conjugators) * n * (cfg.signs == SignMode::Both ? 2 : 1);
      for (std::size_t l = 1; l <= cfg.factors_max; ++l) {
        power *= alphabet;
        per_relator += power;
      }
      Integer tuples = 1;
      for (std::size_t i = 0; i < n; ++i) tuples *= per_relator;
      total += tuples;
    }
    return total;
  }

  std::optional<CohenPresentation> next() {
    if (done_) return std::nullopt;
    if (produced_ == cap_) {
      truncated_ = true;
      done_ = true;
      return std::nullopt;
    }
    CohenPresentation p{base_, {}};
    p.relators.resize(n_);
    std::size_t d = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < lengths_[i]; ++k) p.relators[i].push_back(factor(digits_[d++]));
    ++produced_;
    advance();
    return p;
  }

  bool truncated() const noexcept { return truncated_; }
  std::size_t produced() const noexcept { return produced_; }

 private:
  std::size_t alphabet() const { return conjugators_.size() * n_ * signs_; }

  ConjugateFactor factor(std::size_t digit) const {
    const std::size_t sign = digit % signs_;
    const std::size_t rest = digit / signs_;
    return {conjugators_[rest / n_], rest % n_, sign == 0 ? 1 : -1};
  }

  void reset_lengths() {
    lengths_.assign(n_, 1);
    digits_.assign(n_, 0);
  }

  void advance() {
    for (std::size_t d = digits_.size(); d-- > 0;) {
      if (++digits_[d] < alphabet()) return;
      digits_[d] = 0;
    }
    for (std::size_t i = n_; i-- > 0;) {
      if (++lengths_[i] <= factors_max_) {
        std::size_t total = 0;
        for (auto l : lengths_) total += l;
        digits_.assign(total, 0);
        return;
      }
      lengths_[i] = 1;
    }
    if (++n_ > n_max_) {
      done_ = true;
      return;
    }
    reset_lengths();
  }

  BaseGroup base_;
  std::vector<Element> conjugators_;
  std::size_t factors_max_;
  std::size_t cap_;
  std::size_t signs_;
  std::size_t n_;
  std::size_t n_max_;
  std::vector<std::size_t> lengths_;
  std::vector<std::size_t> digits_;
  std::size_t produced_ = 0;
  bool truncated_ = false;
  bool done_ = false;
};

struct ClassifiedCandidate {
  CohenPresentation presentation;
  ExtensionReport report;
};

struct SearchSummary {
  std::size_t examined = 0;
  std::size_t matched = 0;
  bool truncated = false;
  std::vector<ClassifiedCandidate> candidates;  // every match, stream order
  std::size_t trivial = 0;
  std::size_t proper = 0;
  std::size_t unknown = 0;

  std::vector<const ClassifiedCandidate*> trivial_hits() const {
    std::vector<const ClassifiedCandidate*> out;
    for (const auto& c : candidates)
      if (c.report.verdict == Verdict::Trivial) out.push_back(&c);
    return out;
  }
};

namespace detail {

// Classifies every presentation; worker t takes indices t, t+jobs, ...
// Results land in input order, so output matches a sequential run.
inline std::vector<ExtensionReport> classify_all(const std::vector<CohenPresentation>& ps,
                                                 const ClassifyOptions& opts, unsigned jobs) {
  std::vector<ExtensionReport> out(ps.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(ps.size(), 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < ps.size(); ++i) out[i] = classify_extension(ps[i], opts);
    return out;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned t = 0; t < jobs; ++t)
    workers.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < ps.size(); i += jobs) out[i] = classify_extension(ps[i], opts);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace detail

// Streams candidates, keeps those passing the matrix / admissibility filter
// and classifies each extension.
inline SearchSummary run_search(const BaseGroup& base, const SearchConfig& cfg) {
  PresentationStream stream(base, cfg);
  std::vector<CohenPresentation> matches;
  SearchSummary summary;
  while (auto p = stream.next()) {
    ++summary.examined;
    if (cfg.matrix_filter) {
      if (!(matrix_of(*p) == *cfg.matrix_filter)) continue;
    } else if (cfg.admissible_only && !is_admissible(*p)) {
      continue;
    }
    matches.push_back(std::move(*p));
  }
  summary.truncated = stream.truncated();
  summary.matched = matches.size();

  ClassifyOptions opts;
  opts.budget = cfg.enumeration_budget;
  opts.targets = make_targets(cfg.targets);
  opts.hom_cap = cfg.hom_cap;
  auto reports = detail::classify_all(matches, opts, cfg.jobs);
  for (std::size_t i = 0; i < matches.size(); ++i) {
    switch (reports[i].verdict) {
      case Verdict::Trivial: ++summary.trivial; break;
      case Verdict::Proper: ++summary.proper; break;
      case Verdict::Unknown: ++summary.unknown; break;
    }
    summary.candidates.push_back({std::move(matches[i]), std::move(reports[i])});
  }
  return summary;
}

// Search restricted to presentations whose matrix is exactly `target`.
inline SearchSummary search_trivial_admissible(const BaseGroup& base, const GroupRingMatrix& target,
                                               SearchConfig cfg) {
  if (!is_invertible(target)) throw NotInvertible();
  cfg.matrix_filter = target;
  return run_search(base, cfg);
}

// Bounded evidence about dim([X]): the presentation built directly from X
// plus every searched presentation with matrix exactly X, classified. A
// trivial hit shows dim <= 2 for this class; absence of hits proves nothing.
struct DimEvidence {
  ClassifiedCandidate seed;
  SearchSummary search;

  bool has_trivial_hit() const { return seed.report.verdict == Verdict::Trivial || search.trivial > 0; }
};

inline DimEvidence dim_evidence(const BaseGroup& base, const GroupRingMatrix& x, SearchConfig cfg) {
  if (!is_invertible(x)) throw NotInvertible();
  ClassifyOptions opts;
  opts.budget = cfg.enumeration_budget;
  opts.targets = make_targets(cfg.targets);
  opts.hom_cap = cfg.hom_cap;
  auto seed = presentation_from_matrix(base, x);
  auto report = classify_extension(seed, opts);
  return {{std::move(seed), std::move(report)}, search_trivial_admissible(base, x, std::move(cfg))};
}

}  // namespace cohen
