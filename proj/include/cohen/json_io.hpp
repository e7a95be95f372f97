#pragma once

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohen/abelian.hpp"
#include "cohen/cohen_presentation.hpp"
#include "cohen/extension.hpp"
#include "cohen/search.hpp"
#include "cohen/whitehead.hpp"

// Document formats. Every emitted document carries "tfv": 1; inputs may
// omit it, but any other value is rejected.
//
//   presentation  {"generators": ["g","h"], "relators": ["g^5", "h^2", "h g h g"]}
//   element       {"group": <presentation>, "terms": [[coeff, "word"], ...]}
//   matrix        {"group": <presentation>, "entries": [[<terms>, ...], ...]}   (row-major)
//   cohen         {"base": <presentation>, "n": k, "relators": [[["word", j, s], ...], ...]}
//   certificate   {"moves": [{"move": "swap_rows", "i": 0, "j": 1}, ...]}
//   search config {"base": <presentation>, "n_max": 1, "factors_max": 5, ...}
//
// Words are whitespace-separated letters with optional ^exponent; the empty
// string is the identity. Generator indices j in cohen documents are 1-based.
namespace cohen::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline std::string join(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string join(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

inline void check_version(const json& j, const std::string& path) {
  if (j.is_object() && j.contains("tfv") && j["tfv"] != kSchemaVersion)
    throw ParseError(join(path, "tfv"), j["tfv"].dump(), "unsupported schema version");
}

inline const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, j.dump().substr(0, 40), "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(join(path, key), "", "missing field");
  return *it;
}

inline const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, j.dump().substr(0, 40), "expected an array");
  return j;
}

inline std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, j.dump().substr(0, 40), "expected a string");
  return j.get<std::string>();
}

template <typename T>
T unsigned_at(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw ParseError(path, j.dump().substr(0, 40), "expected a nonnegative integer");
  return j.get<T>();
}

inline std::int64_t int_at(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, j.dump().substr(0, 40), "expected an integer");
  return j.get<std::int64_t>();
}

inline Integer integer_at(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    auto s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos)
      return Integer(s);
  }
  throw ParseError(path, j.dump().substr(0, 40), "expected an integer");
}

}  // namespace detail

inline json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

// ---- presentations and tables -------------------------------------------

inline GroupPresentation presentation_from_json(const json& j, const std::string& path = "") {
  detail::check_version(j, path);
  GroupPresentation p;
  const auto& gens = detail::array_at(detail::field(j, "generators", path), detail::join(path, "generators"));
  for (std::size_t i = 0; i < gens.size(); ++i)
    p.generators.push_back(detail::string_at(gens[i], detail::join(detail::join(path, "generators"), i)));
  if (j.contains("relators")) {
    const auto& rels = detail::array_at(j["relators"], detail::join(path, "relators"));
    for (std::size_t i = 0; i < rels.size(); ++i) {
      auto at = detail::join(detail::join(path, "relators"), i);
      p.relators.push_back(parse_relator(detail::string_at(rels[i], at), p.generators, at));
    }
  }
  try {
    p.validate();
  } catch (const ValidationError& e) {
    throw ParseError(path, "", e.what());
  }
  return p;
}

inline json to_json(const GroupPresentation& p) {
  return {{"tfv", kSchemaVersion}, {"generators", p.generators}, {"relators", p.relator_strings()}};
}

inline json to_json(const FiniteGroupTable& t) {
  std::vector<std::string> words;
  for (Element e = 0; e < t.order(); ++e) words.push_back(format_word(t.canonical_word(e), t.generator_names()));
  std::vector<std::vector<Element>> mult(t.order());
  std::vector<Element> inverse;
  for (Element a = 0; a < t.order(); ++a) {
    inverse.push_back(t.inverse(a));
    for (Element b = 0; b < t.order(); ++b) mult[a].push_back(t.mul(a, b));
  }
  return {{"tfv", kSchemaVersion},
          {"order", t.order()},
          {"generators", t.generator_names()},
          {"identity", 0},
          {"generator_images", t.generator_images()},
          {"inverse", inverse},
          {"canonical_words", words},
          {"mult", mult}};
}

inline FiniteGroupTable table_from_json(const json& j, const std::string& path = "") {
  detail::check_version(j, path);
  std::vector<std::string> names;
  for (const auto& n : detail::field(j, "generators", path)) names.push_back(detail::string_at(n, path + "/generators"));
  const auto& mult_rows = detail::field(j, "mult", path);
  std::vector<Element> mult;
  for (const auto& row : mult_rows)
    for (const auto& v : row) mult.push_back(detail::unsigned_at<Element>(v, path + "/mult"));
  std::vector<Element> gens;
  for (const auto& v : detail::field(j, "generator_images", path))
    gens.push_back(detail::unsigned_at<Element>(v, path + "/generator_images"));
  std::vector<FreeWord> words;
  for (const auto& w : detail::field(j, "canonical_words", path))
    words.push_back(parse_word(detail::string_at(w, path + "/canonical_words"), names, path + "/canonical_words"));
  try {
    return FiniteGroupTable::from_parts(names, std::move(mult), std::move(gens), std::move(words));
  } catch (const ValidationError& e) {
    throw ParseError(path, "", e.what());
  }
}

// ---- group ring -----------------------------------------------------------

inline BaseGroup base_from_json(const json& j, const std::string& path, std::size_t budget = 100'000) {
  auto p = presentation_from_json(j, path);
  try {
    return BaseGroup::from_presentation(std::move(p), budget);
  } catch (const ValidationError& e) {
    throw ParseError(path, "", e.what());
  }
}

inline Element element_from_word(const BaseGroup& g, const json& j, const std::string& path) {
  auto w = parse_word(detail::string_at(j, path), g.presentation.generators, path);
  return g.table->evaluate(w);
}

inline GroupRingElement terms_from_json(const BaseGroup& g, const json& terms, const std::string& path) {
  GroupRingElement x(g.table);
  detail::array_at(terms, path);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto at = detail::join(path, i);
    const auto& t = terms[i];
    if (!t.is_array() || t.size() != 2) throw ParseError(at, t.dump().substr(0, 40), "expected [coeff, \"word\"]");
    x[element_from_word(g, t[1], detail::join(at, 1))] += detail::integer_at(t[0], detail::join(at, 0));
  }
  return x;
}

inline json terms_to_json(const GroupRingElement& x) {
  json terms = json::array();
  const auto& t = x.table();
  for (Element e = 0; e < t.order(); ++e)
    if (x[e] != 0) terms.push_back({integer_to_json(x[e]), format_word(t.canonical_word(e), t.generator_names())});
  return terms;
}

struct ElementDocument {
  BaseGroup group;
  GroupRingElement element;
};

inline ElementDocument element_from_json(const json& j, const std::string& path = "") {
  detail::check_version(j, path);
  auto g = base_from_json(detail::field(j, "group", path), detail::join(path, "group"));
  auto x = terms_from_json(g, detail::field(j, "terms", path), detail::join(path, "terms"));
  return {std::move(g), std::move(x)};
}

inline json to_json(const GroupPresentation& group, const GroupRingElement& x) {
  return {{"tfv", kSchemaVersion}, {"group", to_json(group)}, {"terms", terms_to_json(x)}};
}

inline GroupRingMatrix matrix_entries_from_json(const BaseGroup& g, const json& rows, const std::string& path) {
  detail::array_at(rows, path);
  const std::size_t n = rows.size();
  if (n == 0) throw ParseError(path, "", "matrix must be nonempty");
  GroupRingMatrix m(g.table, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row_path = detail::join(path, i);
    const auto& row = detail::array_at(rows[i], row_path);
    if (row.size() != n) throw ParseError(row_path, "", "matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(i, c) = terms_from_json(g, row[c], detail::join(row_path, c));
  }
  return m;
}

inline json matrix_entries_to_json(const GroupRingMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(terms_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct MatrixDocument {
  BaseGroup group;
  GroupRingMatrix matrix;
};

inline MatrixDocument matrix_from_json(const json& j, const std::string& path = "") {
  detail::check_version(j, path);
  auto g = base_from_json(detail::field(j, "group", path), detail::join(path, "group"));
  auto m = matrix_entries_from_json(g, detail::field(j, "entries", path), detail::join(path, "entries"));
  return {std::move(g), std::move(m)};
}

inline json to_json(const GroupPresentation& group, const GroupRingMatrix& m) {
  return {{"tfv", kSchemaVersion}, {"group", to_json(group)}, {"entries", matrix_entries_to_json(m)}};
}

// Human-readable rows, e.g. [["1 + h", "-g"], ["0", "1"]].
inline json matrix_display(const GroupRingMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(i, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- Cohen presentations ------------------------------------------------

inline std::vector<Relator> relators_from_json(const BaseGroup& base, const json& rels, std::size_t n,
                                               const std::string& path) {
  detail::array_at(rels, path);
  if (rels.size() != n)
    throw ParseError(path, std::to_string(rels.size()), "expected exactly n = " + std::to_string(n) + " relators");
  std::vector<Relator> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto rel_path = detail::join(path, i);
    const auto& factors = detail::array_at(rels[i], rel_path);
    for (std::size_t k = 0; k < factors.size(); ++k) {
      auto at = detail::join(rel_path, k);
      const auto& f = factors[k];
      if (!f.is_array() || f.size() != 3) throw ParseError(at, f.dump().substr(0, 40), "expected [\"word\", j, sign]");
      Element g = element_from_word(base, f[0], detail::join(at, 0));
      auto j = detail::int_at(f[1], detail::join(at, 1));
      if (j < 1 || static_cast<std::size_t>(j) > n) throw ParseError(detail::join(at, 1), f[1].dump(), "generator index out of range 1..n");
      auto s = detail::int_at(f[2], detail::join(at, 2));
      if (s != 1 && s != -1) throw ParseError(detail::join(at, 2), f[2].dump(), "sign must be 1 or -1");
      out[i].push_back({g, static_cast<std::size_t>(j - 1), static_cast<int>(s)});
    }
  }
  return out;
}

inline json relators_to_json(const CohenPresentation& p) {
  json rels = json::array();
  const auto& t = *p.base.table;
  for (const auto& r : p.relators) {
    json factors = json::array();
    for (const auto& f : r)
      factors.push_back({format_word(t.canonical_word(f.conjugator), t.generator_names()), f.generator + 1, f.sign});
    rels.push_back(std::move(factors));
  }
  return rels;
}

inline CohenPresentation cohen_from_json(const json& j, const std::string& path = "") {
  detail::check_version(j, path);
  auto base = base_from_json(detail::field(j, "base", path), detail::join(path, "base"));
  auto n = detail::unsigned_at<std::size_t>(detail::field(j, "n", path), detail::join(path, "n"));
  if (n == 0) throw ParseError(detail::join(path, "n"), "0", "n must be positive");
  auto rels = relators_from_json(base, detail::field(j, "relators", path), n, detail::join(path, "relators"));
  return {std::move(base), std::move(rels)};
}

inline json to_json(const CohenPresentation& p) {
  return {{"tfv", kSchemaVersion},
          {"base", to_json(p.base.presentation)},
          {"n", p.n()},
          {"relators", relators_to_json(p)}};
}

// Relator as a word in the base generators and x1..xn.
inline std::string relator_display(const CohenPresentation& p, std::size_t i) {
  auto ext = extension_presentation(p);
  return format_word(ext.presentation.relators[p.base.presentation.relators.size() + i], ext.presentation.generators);
}

// ---- certificates ---------------------------------------------------------

inline WhiteheadCertificate certificate_from_json(const BaseGroup& g, const json& j, const std::string& path = "") {
  detail::check_version(j, path);
  WhiteheadCertificate c;
  const auto& moves_json = detail::array_at(detail::field(j, "moves", path), detail::join(path, "moves"));
  for (std::size_t k = 0; k < moves_json.size(); ++k) {
    auto at = detail::join(detail::join(path, "moves"), k);
    const auto& m = moves_json[k];
    auto kind = detail::string_at(detail::field(m, "move", at), detail::join(at, "move"));
    auto idx = [&](const char* key) {
      return detail::unsigned_at<std::size_t>(detail::field(m, key, at), detail::join(at, key));
    };
    if (kind == "stabilize") {
      c.moves.push_back(moves::Stabilize{});
    } else if (kind == "destabilize") {
      c.moves.push_back(moves::Destabilize{});
    } else if (kind == "swap_rows") {
      c.moves.push_back(moves::SwapRows{idx("i"), idx("j")});
    } else if (kind == "scale_row") {
      auto sign = detail::int_at(detail::field(m, "sign", at), detail::join(at, "sign"));
      if (sign != 1 && sign != -1) throw ParseError(detail::join(at, "sign"), std::to_string(sign), "sign must be 1 or -1");
      Element gamma = element_from_word(g, detail::field(m, "gamma", at), detail::join(at, "gamma"));
      c.moves.push_back(moves::ScaleRow{idx("i"), static_cast<int>(sign), gamma});
    } else if (kind == "add_row") {
      auto lambda = terms_from_json(g, detail::field(m, "lambda", at), detail::join(at, "lambda"));
      c.moves.push_back(moves::AddRow{idx("i"), idx("j"), std::move(lambda)});
    } else {
      throw ParseError(detail::join(at, "move"), kind, "unknown move");
    }
  }
  return c;
}

inline json to_json(const WhiteheadCertificate& c, const FiniteGroupTable& g) {
  json moves_json = json::array();
  for (const auto& m : c.moves) {
    std::visit(
        [&](const auto& mv) {
          using M = std::decay_t<decltype(mv)>;
          if constexpr (std::is_same_v<M, moves::Stabilize>) {
            moves_json.push_back({{"move", "stabilize"}});
          } else if constexpr (std::is_same_v<M, moves::Destabilize>) {
            moves_json.push_back({{"move", "destabilize"}});
          } else if constexpr (std::is_same_v<M, moves::SwapRows>) {
            moves_json.push_back({{"move", "swap_rows"}, {"i", mv.i}, {"j", mv.j}});
          } else if constexpr (std::is_same_v<M, moves::ScaleRow>) {
            moves_json.push_back({{"move", "scale_row"},
                                  {"i", mv.i},
                                  {"sign", mv.sign},
                                  {"gamma", format_word(g.canonical_word(mv.gamma), g.generator_names())}});
          } else {
            moves_json.push_back({{"move", "add_row"}, {"i", mv.i}, {"j", mv.j}, {"lambda", terms_to_json(mv.lambda)}});
          }
        },
        m);
  }
  return {{"tfv", kSchemaVersion}, {"moves", moves_json}};
}

// ---- reports ----------------------------------------------------------------

inline json to_json(const AbelianInvariants& a) {
  json torsion = json::array();
  for (const auto& t : a.torsion) torsion.push_back(integer_to_json(t));
  return {{"free_rank", a.free_rank}, {"torsion", torsion}};
}

inline json to_json(const ExtensionReport& r) {
  json out{{"tfv", kSchemaVersion},
           {"verdict", to_string(r.verdict)},
           {"order", r.order ? json(*r.order) : json(nullptr)},
           {"witness", nullptr},
           {"budget_used", r.budget_used}};
  if (r.witness)
    out["witness"] = {{"target", r.witness->target},
                      {"target_order", r.witness->target_order},
                      {"images", r.witness->images},
                      {"image_words", r.witness->image_words}};
  if (!r.skipped_targets.empty()) out["skipped_targets"] = r.skipped_targets;
  return out;
}

// ---- search -------------------------------------------------------------------

struct SearchDocument {
  BaseGroup base;
  SearchConfig config;
};

inline SearchDocument search_config_from_json(const json& j, const std::string& path = "") {
  detail::check_version(j, path);
  auto base = base_from_json(detail::field(j, "base", path), detail::join(path, "base"));
  SearchConfig cfg;
  auto opt_unsigned = [&](const char* key, auto& out) {
    if (j.contains(key)) out = detail::unsigned_at<std::decay_t<decltype(out)>>(j[key], detail::join(path, key));
  };
  opt_unsigned("n_max", cfg.n_max);
  opt_unsigned("factors_max", cfg.factors_max);
  opt_unsigned("enumeration_budget", cfg.enumeration_budget);
  opt_unsigned("candidate_cap", cfg.candidate_cap);
  opt_unsigned("hom_cap", cfg.hom_cap);
  opt_unsigned("jobs", cfg.jobs);
  if (j.contains("conjugators") && !(j["conjugators"].is_string() && j["conjugators"] == "all")) {
    const auto& cs = detail::array_at(j["conjugators"], detail::join(path, "conjugators"));
    for (std::size_t i = 0; i < cs.size(); ++i)
      cfg.conjugators.push_back(element_from_word(base, cs[i], detail::join(detail::join(path, "conjugators"), i)));
    if (cfg.conjugators.empty()) throw ParseError(detail::join(path, "conjugators"), "[]", "conjugator set must be nonempty");
  }
  if (j.contains("signs")) {
    auto s = detail::string_at(j["signs"], detail::join(path, "signs"));
    if (s == "both")
      cfg.signs = SignMode::Both;
    else if (s == "positive_only")
      cfg.signs = SignMode::PositiveOnly;
    else
      throw ParseError(detail::join(path, "signs"), s, "expected \"both\" or \"positive_only\"");
  }
  if (j.contains("admissible_only")) {
    if (!j["admissible_only"].is_boolean()) throw ParseError(detail::join(path, "admissible_only"), "", "expected a boolean");
    cfg.admissible_only = j["admissible_only"].get<bool>();
  }
  if (j.contains("matrix") && !j["matrix"].is_null())
    cfg.matrix_filter = matrix_entries_from_json(base, j["matrix"], detail::join(path, "matrix"));
  if (j.contains("targets")) {
    cfg.targets.clear();
    const auto& ts = detail::array_at(j["targets"], detail::join(path, "targets"));
    for (std::size_t i = 0; i < ts.size(); ++i) {
      auto name = detail::string_at(ts[i], detail::join(detail::join(path, "targets"), i));
      try {
        parse_target(name);
      } catch (const Error&) {
        throw ParseError(detail::join(detail::join(path, "targets"), i), name, "unknown target group");
      }
      cfg.targets.push_back(name);
    }
  }
  try {
    cfg.validate(base);
  } catch (const Error& e) {
    throw ParseError(path, "", e.what());
  }
  return {std::move(base), std::move(cfg)};
}

inline json candidate_to_json(const ClassifiedCandidate& c) {
  json relators = json::array();
  for (std::size_t i = 0; i < c.presentation.n(); ++i) relators.push_back(relator_display(c.presentation, i));
  json report = to_json(c.report);
  report.erase("tfv");
  return {{"relators", relators}, {"factors", relators_to_json(c.presentation)}, {"report", report}};
}

inline json to_json(const SearchSummary& s, bool list_candidates) {
  json hits = json::array();
  for (const auto* c : s.trivial_hits()) hits.push_back(candidate_to_json(*c));
  json out{{"tfv", kSchemaVersion},
           {"examined", s.examined},
           {"matched", s.matched},
           {"truncated", s.truncated},
           {"trivial", s.trivial},
           {"proper", s.proper},
           {"unknown", s.unknown},
           {"trivial_hits", hits}};
  if (list_candidates) {
    json all = json::array();
    for (const auto& c : s.candidates) all.push_back(candidate_to_json(c));
    out["candidates"] = all;
  }
  return out;
}

inline json to_json(const DimEvidence& d, bool list_candidates) {
  json search = to_json(d.search, list_candidates);
  search.erase("tfv");
  return {{"tfv", kSchemaVersion},
          {"kind", "bounded evidence"},
          {"trivial_hit", d.has_trivial_hit()},
          {"seed", candidate_to_json(d.seed)},
          {"search", search}};
}

}  // namespace cohen::io
