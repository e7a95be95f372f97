#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohen/cohen_presentation.hpp"
#include "cohen/coset_enumeration.hpp"
#include "cohen/homomorphisms.hpp"
#include "cohen/targets.hpp"

namespace cohen {

enum class ExtensionForm { Direct, Tubing };

// A presentation of pi(P). Generators are the base generators followed by
// the extension generators.
struct ExtensionPresentation {
  GroupPresentation presentation;
  ExtensionForm form = ExtensionForm::Direct;
  std::size_t base_generators = 0;
};

namespace detail {

inline std::string fresh_name(const std::vector<std::string>& taken, std::string name) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name = "_" + name;
  return name;
}

// g x^sign g^-1 with g spelled by its canonical word.
inline FreeWord conjugate_word(const FiniteGroupTable& base, Element g, std::size_t x, int sign) {
  return FreeWord::generator(x, sign).conjugated_by(base.canonical_word(g));
}

}  // namespace detail

// pi(P) = (G * <x_1..x_n>) / (r_1..r_n): base relators s_b, then the
// relators r_i spelled over the base generators and the x_j.
inline ExtensionPresentation extension_presentation(const CohenPresentation& p) {
  p.validate();
  const auto& base = *p.base.table;
  ExtensionPresentation out;
  out.form = ExtensionForm::Direct;
  out.base_generators = p.base.presentation.num_generators();
  auto& pres = out.presentation;
  pres.generators = p.base.presentation.generators;
  for (std::size_t i = 0; i < p.n(); ++i)
    pres.generators.push_back(detail::fresh_name(pres.generators, "x" + std::to_string(i + 1)));
  pres.relators = p.base.presentation.relators;
  for (const auto& r : p.relators) {
    FreeWord w;
    for (const auto& f : r) w *= detail::conjugate_word(base, f.conjugator, out.base_generators + f.generator, f.sign);
    pres.relators.push_back(std::move(w));
  }
  return out;
}

// The presentation with one generator x(i,k) per factor, the product
// relators x(i,1)...x(i,n(i)) and, for k >= 2, the tubing relations
// x(i,k) = t(i,k) with t(i,k) = g(i,k) x(j,1)^e(i,k) g(i,k)^-1.
// Here x(i,1) plays the role of x_i.
inline ExtensionPresentation tubing_presentation(const CohenPresentation& p) {
  p.validate();
  for (std::size_t i = 0; i < p.n(); ++i)
    if (p.relators[i].empty() || !(p.relators[i].front() == ConjugateFactor{0, i, 1})) throw NotNormalized(i);

  const auto& base = *p.base.table;
  ExtensionPresentation out;
  out.form = ExtensionForm::Tubing;
  out.base_generators = p.base.presentation.num_generators();
  auto& pres = out.presentation;
  pres.generators = p.base.presentation.generators;

  std::vector<std::vector<std::size_t>> index(p.n());  // index[i][k] = generator of x(i,k)
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t k = 0; k < p.relators[i].size(); ++k) {
      index[i].push_back(pres.generators.size());
      pres.generators.push_back(detail::fresh_name(
          pres.generators, "x(" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")"));
    }

  pres.relators = p.base.presentation.relators;
  for (std::size_t i = 0; i < p.n(); ++i) {
    FreeWord product;
    for (std::size_t g : index[i]) product *= FreeWord::generator(g);
    pres.relators.push_back(std::move(product));
  }
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t k = 1; k < p.relators[i].size(); ++k) {
      const auto& f = p.relators[i][k];
      FreeWord t = detail::conjugate_word(base, f.conjugator, index[f.generator][0], f.sign);
      pres.relators.push_back(FreeWord::generator(index[i][k]) * t.inverse());
    }
  return out;
}

// Tietze-eliminates every x(i,k), k >= 2, from a tubing presentation using
// its tubing relation. The result is spelled over the base generators and
// the x(i,1), and its relators coincide word for word with those of
// extension_presentation(P).
inline GroupPresentation eliminate_tubing(const ExtensionPresentation& tubing, const CohenPresentation& p) {
  if (tubing.form != ExtensionForm::Tubing) throw ValidationError("not a tubing presentation");
  GroupPresentation pres = tubing.presentation;
  // Tubing relations sit at the end in the same order as their generators,
  // so eliminating from the back keeps earlier indices valid.
  std::size_t gen = pres.num_generators();
  std::size_t rel = pres.relators.size();
  for (std::size_t i = p.n(); i-- > 0;) {
    for (std::size_t k = p.relators[i].size(); k-- > 1;) pres = eliminate_generator(pres, --gen, --rel);
    --gen;  // x(i,1) stays
  }
  return pres;
}

enum class Verdict { Trivial, Proper, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "trivial";
    case Verdict::Proper: return "proper";
    default: return "unknown";
  }
}

// A surjection from pi(P) onto a named finite group that pi does not
// surject onto (or that is larger than pi).
struct Witness {
  std::string target;
  std::size_t target_order = 0;
  Homomorphism images;  // one target element per generator of pi(P)
  std::vector<std::string> image_words;
};

struct ExtensionReport {
  Verdict verdict = Verdict::Unknown;
  std::optional<std::size_t> order;
  std::optional<Witness> witness;
  std::size_t budget_used = 0;
  std::vector<std::string> skipped_targets;  // hom-search cap hit
};

struct ClassifyOptions {
  std::size_t budget = 100'000;
  std::vector<NamedGroup> targets = make_targets(default_target_names());
  std::uint64_t hom_cap = kDefaultHomSearchCap;
};

// Trivial when pi(P) closes at order |pi| (the split surjection onto pi is
// then a bijection); Proper when it closes at another order or surjects
// onto a target pi cannot map onto; otherwise Unknown.
inline ExtensionReport classify_extension(const CohenPresentation& p, const ClassifyOptions& opts = {}) {
  const auto ext = extension_presentation(p);
  ExtensionReport report;
  auto run = enumerate_cosets(ext.presentation, opts.budget);
  report.budget_used = run.cosets_defined;
  if (run.closed()) {
    report.order = run.order();
    report.verdict = run.order() == p.base.order() ? Verdict::Trivial : Verdict::Proper;
    return report;
  }
  for (const auto& target : opts.targets) {
    try {
      if (target.table->order() <= p.base.order() &&
          exists_surjection(p.base.presentation, *target.table, opts.hom_cap))
        continue;
      auto h = exists_surjection(ext.presentation, *target.table, opts.hom_cap);
      if (!h) continue;
      Witness w{target.name, target.table->order(), *h, {}};
      for (Element e : *h) w.image_words.push_back(format_word(target.table->canonical_word(e),
                                                               target.table->generator_names()));
      report.verdict = Verdict::Proper;
      report.witness = std::move(w);
      return report;
    } catch (const SearchCapExceeded&) {
      report.skipped_targets.push_back(target.name);
    }
  }
  return report;
}

}  // namespace cohen
