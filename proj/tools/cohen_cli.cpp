// cohen: command-line front end for the cohen library.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cohen/cohen.hpp"
#include "cohen/json_io.hpp"

namespace fs = std::filesystem;
using cohen::io::json;

namespace {

enum Exit { kOk = 0, kVerificationFailed = 1, kInputError = 2, kBudgetExhausted = 3 };

struct Options {
  std::size_t budget = 100'000;
  std::uint64_t hom_cap = cohen::kDefaultHomSearchCap;
  std::vector<std::string> targets = cohen::default_target_names();
  unsigned jobs = 1;
  bool pretty = false;
  bool timing = false;
  bool list_candidates = false;
  std::string form = "direct";
  std::string repro_dir = COHEN_REPRO_DIR;
};

struct Outcome {
  json report;
  int status = kOk;
};

// Input error tied to a file, used for everything that is not a ParseError.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A loaded document together with the file it came from.
struct Doc {
  std::string file;
  json value;
  std::string path;  // JSON-pointer prefix inside the file
};

Doc load(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InputError(file + ": cannot open file");
  try {
    return {file, json::parse(in), ""};
  } catch (const json::parse_error& e) {
    throw InputError(file + ": invalid JSON at byte " + std::to_string(e.byte));
  }
}

// Runs a document parser, citing the file on failure.
template <typename F>
auto parse_doc(const Doc& d, F&& f) {
  try {
    return f(d.value, d.path);
  } catch (const cohen::ParseError& e) {
    throw InputError(d.file + ": " + e.what());
  }
}

cohen::ClassifyOptions classify_options(const Options& o) {
  cohen::ClassifyOptions c;
  c.budget = o.budget;
  c.hom_cap = o.hom_cap;
  c.targets = cohen::make_targets(o.targets);
  return c;
}

// ---- subcommands --------------------------------------------------------------

Outcome group_build(const Doc& d, const Options& o) {
  auto p = parse_doc(d, [](const json& j, const std::string& p) { return cohen::io::presentation_from_json(j, p); });
  auto run = cohen::coset_enumerate(p, o.budget);
  if (auto* ex = std::get_if<cohen::Exceeded>(&run))
    return {{{"tfv", 1}, {"closed", false}, {"cosets_defined", ex->cosets_defined}, {"budget", o.budget}},
            kBudgetExhausted};
  json out = cohen::io::to_json(std::get<cohen::FiniteGroupTable>(run));
  out["closed"] = true;
  return {out};
}

Outcome unit_check(const Doc& d, const Options&) {
  auto doc = parse_doc(d, [](const json& j, const std::string& p) { return cohen::io::element_from_json(j, p); });
  const bool unit = cohen::is_unit(doc.element);
  json out{{"tfv", 1},
           {"element", doc.element.to_string()},
           {"augmentation", cohen::io::integer_to_json(cohen::augmentation(doc.element))},
           {"determinant", cohen::io::integer_to_json(cohen::determinant(cohen::regular_representation(doc.element)))},
           {"unit", unit}};
  if (unit) out["inverse"] = cohen::unit_inverse(doc.element).to_string();
  return {out};
}

Outcome matrix_of(const Doc& d, const Options&) {
  auto p = parse_doc(d, [](const json& j, const std::string& p) { return cohen::io::cohen_from_json(j, p); });
  auto x = cohen::matrix_of(p);
  json out = cohen::io::to_json(p.base.presentation, x);
  out["display"] = cohen::io::matrix_display(x);
  out["invertible"] = cohen::is_invertible(x);
  return {out};
}

Outcome from_matrix(const Doc& d, const Options&) {
  auto doc = parse_doc(d, [](const json& j, const std::string& p) { return cohen::io::matrix_from_json(j, p); });
  auto p = cohen::presentation_from_matrix(doc.group, doc.matrix);
  json out = cohen::io::to_json(p);
  json words = json::array();
  for (std::size_t i = 0; i < p.n(); ++i) words.push_back(cohen::io::relator_display(p, i));
  out["relator_words"] = words;
  return {out};
}

Outcome admissible(const Doc& d, const Options&) {
  auto p = parse_doc(d, [](const json& j, const std::string& p) { return cohen::io::cohen_from_json(j, p); });
  auto x = cohen::matrix_of(p);
  return {{{"tfv", 1},
           {"admissible", cohen::is_invertible(x)},
           {"augmented_determinant", cohen::io::integer_to_json(cohen::determinant(cohen::augmented(x)))},
           {"display", cohen::io::matrix_display(x)}}};
}

Outcome normalize(const Doc& d, const Options&) {
  auto p = parse_doc(d, [](const json& j, const std::string& p) { return cohen::io::cohen_from_json(j, p); });
  auto r = cohen::normalize(p);
  return {{{"tfv", 1},
           {"presentation", cohen::io::to_json(r.presentation)},
           {"certificate", cohen::io::to_json(r.certificate, *p.base.table)},
           {"display", cohen::io::matrix_display(cohen::matrix_of(r.presentation))}}};
}

Outcome extend(const Doc& d, const Options& o) {
  auto p = parse_doc(d, [](const json& j, const std::string& p) { return cohen::io::cohen_from_json(j, p); });
  cohen::ExtensionPresentation ext;
  if (o.form == "direct")
    ext = cohen::extension_presentation(p);
  else if (o.form == "tubing")
    ext = cohen::tubing_presentation(p);
  else
    throw InputError("--form must be direct or tubing, got '" + o.form + "'");
  json out = cohen::io::to_json(ext.presentation);
  out["form"] = o.form;
  out["base_generators"] = ext.base_generators;
  return {out};
}

Outcome classify(const Doc& d, const Options& o) {
  auto p = parse_doc(d, [](const json& j, const std::string& p) { return cohen::io::cohen_from_json(j, p); });
  auto r = cohen::classify_extension(p, classify_options(o));
  return {cohen::io::to_json(r), r.verdict == cohen::Verdict::Unknown ? kBudgetExhausted : kOk};
}

// Fills search defaults from the command line where the config is silent.
json with_defaults(json cfg, const Options& o) {
  if (!cfg.contains("enumeration_budget")) cfg["enumeration_budget"] = o.budget;
  if (!cfg.contains("hom_cap")) cfg["hom_cap"] = o.hom_cap;
  if (!cfg.contains("targets")) cfg["targets"] = o.targets;
  if (!cfg.contains("jobs")) cfg["jobs"] = o.jobs;
  return cfg;
}

Outcome dim_evidence(const Doc& m, const std::optional<Doc>& cfg, const Options& o) {
  auto doc = parse_doc(m, [](const json& j, const std::string& p) { return cohen::io::matrix_from_json(j, p); });
  Doc c = cfg ? *cfg : Doc{m.file, json::object(), ""};
  if (!c.value.is_object()) throw InputError(c.file + ": search config must be an object");
  if (!c.value.contains("base")) c.value["base"] = m.value.at("group");
  c.value = with_defaults(c.value, o);
  auto parsed = parse_doc(c, [](const json& j, const std::string& p) { return cohen::io::search_config_from_json(j, p); });
  if (!(parsed.base.presentation == doc.group.presentation))
    throw InputError("search config base differs from the matrix group");
  auto ev = cohen::dim_evidence(doc.group, doc.matrix, parsed.config);
  return {cohen::io::to_json(ev, o.list_candidates)};
}

Outcome search(const Doc& d, const Options& o) {
  if (!d.value.is_object()) throw InputError(d.file + ": search config must be an object");
  Doc c{d.file, with_defaults(d.value, o), d.path};
  auto parsed = parse_doc(c, [](const json& j, const std::string& p) { return cohen::io::search_config_from_json(j, p); });
  auto summary = cohen::run_search(parsed.base, parsed.config);
  return {cohen::io::to_json(summary, o.list_candidates)};
}

Outcome verify_cert(const Doc& xd, const Doc& yd, const Doc& cd, const Options&) {
  auto x = parse_doc(xd, [](const json& j, const std::string& p) { return cohen::io::matrix_from_json(j, p); });
  auto y = parse_doc(yd, [](const json& j, const std::string& p) { return cohen::io::matrix_from_json(j, p); });
  if (!(x.group.presentation == y.group.presentation)) throw InputError("X and Y are over different groups");
  auto c = parse_doc(cd, [&](const json& j, const std::string& p) { return cohen::io::certificate_from_json(x.group, j, p); });
  json out{{"tfv", 1}, {"moves", c.moves.size()}};
  try {
    out["valid"] = cohen::verify_certificate(x.matrix, y.matrix, c);
  } catch (const cohen::IllegalMove& e) {
    out["valid"] = false;
    out["illegal_move"] = e.index();
    out["reason"] = e.what();
  }
  return {out, out["valid"].get<bool>() ? kOk : kVerificationFailed};
}

// ---- repro -------------------------------------------------------------------

std::vector<std::string> repro_names(const std::string& dir) {
  std::vector<std::string> names;
  if (fs::is_directory(dir))
    for (const auto& e : fs::directory_iterator(dir))
      if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

Outcome run_command(const std::string& command, const std::map<std::string, Doc>& inputs, const Options& o);

Outcome repro(const std::string& name, const Options& base_opts) {
  const std::string file = (fs::path(base_opts.repro_dir) / (name + ".json")).string();
  if (!fs::exists(file)) {
    std::string known;
    for (const auto& n : repro_names(base_opts.repro_dir)) known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown repro target '" + name + "' (known: " + known + ")");
  }
  Doc config = load(file);
  const auto& j = config.value;
  auto command = cohen::io::detail::string_at(cohen::io::detail::field(j, "command", ""), "/command");
  Options o = base_opts;
  if (j.contains("options")) {
    const auto& opt = j["options"];
    if (opt.contains("budget")) o.budget = opt["budget"].get<std::size_t>();
    if (opt.contains("form")) o.form = opt["form"].get<std::string>();
    if (opt.contains("targets")) o.targets = opt["targets"].get<std::vector<std::string>>();
  }
  std::map<std::string, Doc> inputs;
  for (const auto& [key, value] : cohen::io::detail::field(j, "inputs", "").items())
    inputs[key] = Doc{file, value, "/inputs/" + key};
  Outcome inner = run_command(command, inputs, o);

  json checks = json::array();
  bool ok = true;
  for (const auto& [pointer, expected] : cohen::io::detail::field(j, "expect", "").items()) {
    json actual = nullptr;
    try {
      actual = inner.report.at(json::json_pointer(pointer));
    } catch (const json::exception&) {
    }
    const bool pass = actual == expected;
    ok = ok && pass;
    checks.push_back({{"path", pointer}, {"expected", expected}, {"actual", actual}, {"ok", pass}});
  }
  json out{{"tfv", 1}, {"repro", name}, {"command", command}, {"result", inner.report}, {"checks", checks}, {"ok", ok}};
  if (j.contains("description")) out["description"] = j["description"];
  return {out, ok ? kOk : kVerificationFailed};
}

const Doc& need(const std::map<std::string, Doc>& inputs, const std::string& key) {
  auto it = inputs.find(key);
  if (it == inputs.end()) throw InputError("missing input '" + key + "'");
  return it->second;
}

Outcome run_command(const std::string& command, const std::map<std::string, Doc>& in, const Options& o) {
  if (command == "group-build") return group_build(need(in, "presentation"), o);
  if (command == "unit-check") return unit_check(need(in, "element"), o);
  if (command == "matrix-of") return matrix_of(need(in, "presentation"), o);
  if (command == "from-matrix") return from_matrix(need(in, "matrix"), o);
  if (command == "admissible") return admissible(need(in, "presentation"), o);
  if (command == "normalize") return normalize(need(in, "presentation"), o);
  if (command == "extend") return extend(need(in, "presentation"), o);
  if (command == "classify") return classify(need(in, "presentation"), o);
  if (command == "dim-evidence") {
    auto it = in.find("config");
    return dim_evidence(need(in, "matrix"), it == in.end() ? std::nullopt : std::optional<Doc>(it->second), o);
  }
  if (command == "search") return search(need(in, "config"), o);
  if (command == "verify-cert") return verify_cert(need(in, "x"), need(in, "y"), need(in, "certificate"), o);
  throw InputError("unknown command '" + command + "'");
}

// ---- pretty printing ------------------------------------------------------------

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>().empty() ? "\"\"" : v.get<std::string>();
  return v.dump();
}

bool is_string_grid(const json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_array() || row.empty()) return false;
    for (const auto& c : row)
      if (!c.is_string()) return false;
  }
  return true;
}

bool is_flat(const json& v) {
  if (!v.is_array()) return false;
  return std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); });
}

void render(std::ostream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    std::size_t width = 0;
    for (const auto& [k, _] : v.items()) width = std::max(width, k.size());
    for (const auto& [k, e] : v.items()) {
      if (k == "tfv") continue;
      os << pad << k << std::string(width - k.size() + 2, ' ');
      if (e.is_primitive()) {
        os << scalar(e) << "\n";
      } else if (is_flat(e)) {
        std::string line;
        for (const auto& x : e) line += (line.empty() ? "" : ", ") + scalar(x);
        os << "[" << line << "]\n";
      } else {
        os << "\n";
        render(os, e, indent + 2);
      }
    }
  } else if (is_string_grid(v)) {
    std::vector<std::size_t> widths;
    for (const auto& row : v)
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (widths.size() <= c) widths.push_back(0);
        widths[c] = std::max(widths[c], row[c].get<std::string>().size());
      }
    for (const auto& row : v) {
      os << pad << "|";
      for (std::size_t c = 0; c < row.size(); ++c) {
        auto s = row[c].get<std::string>();
        os << " " << s << std::string(widths[c] - s.size(), ' ') << " |";
      }
      os << "\n";
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_primitive()) {
        os << pad << "- " << scalar(v[i]) << "\n";
      } else if (is_flat(v[i])) {
        std::string line;
        for (const auto& x : v[i]) line += (line.empty() ? "" : ", ") + scalar(x);
        os << pad << "- [" << line << "]\n";
      } else {
        os << pad << "[" << i << "]\n";
        render(os, v[i], indent + 2);
      }
    }
  } else {
    os << pad << scalar(v) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen presentations, integral group rings and extension classification"};
  app.require_subcommand(1);
  Options o;
  std::string targets_csv;
  app.add_option("--budget", o.budget, "coset enumeration budget")->capture_default_str();
  app.add_option("--hom-cap", o.hom_cap, "cap on homomorphism search nodes per target")->capture_default_str();
  app.add_option("--targets", targets_csv, "comma-separated witness targets, e.g. S5,A5,C2");
  app.add_option("--jobs", o.jobs, "worker threads for search")->capture_default_str()->check(CLI::PositiveNumber);
  auto* pretty = app.add_flag("--pretty", o.pretty, "render a human-readable table");
  app.add_flag("--json", "JSON output (default)")->excludes(pretty);
  app.add_flag("--timing", o.timing, "include wall-clock timing in the report");
  app.add_flag("--list", o.list_candidates, "list every matched candidate in search output");

  std::map<std::string, Doc> docs;
  std::string command;
  std::map<std::string, std::string> files;
  auto file_sub = [&](const std::string& name, const std::string& help,
                      const std::vector<std::string>& keys) {
    auto* sub = app.add_subcommand(name, help);
    for (const auto& k : keys) sub->add_option(k, files[k], k + " document (JSON)")->required()->check(CLI::ExistingFile);
    sub->callback([&, name] { command = name; });
    return sub;
  };
  file_sub("group-build", "enumerate a finite presentation into a table", {"presentation"});
  file_sub("unit-check", "decide whether a group ring element is a unit", {"element"});
  file_sub("matrix-of", "the matrix X(P) of a Cohen presentation", {"presentation"});
  file_sub("from-matrix", "a Cohen presentation realising a matrix", {"matrix"});
  file_sub("admissible", "whether X(P) is invertible", {"presentation"});
  file_sub("normalize", "normalise a presentation and emit a certificate", {"presentation"});
  auto* ext = file_sub("extend", "a presentation of the extension group", {"presentation"});
  ext->add_option("--form", o.form, "direct or tubing")->check(CLI::IsMember({"direct", "tubing"}))->capture_default_str();
  file_sub("classify", "classify the extension as trivial, proper or unknown", {"presentation"});
  auto* dim = file_sub("dim-evidence", "bounded search for trivial presentations of a matrix", {"matrix"});
  std::string dim_config;
  dim->add_option("--config", dim_config, "search bounds (JSON)")->check(CLI::ExistingFile);
  auto* srch = app.add_subcommand("search", "run a search described by a config file");
  std::string search_config;
  srch->add_option("config,--config", search_config, "search config (JSON)")->required()->check(CLI::ExistingFile);
  srch->callback([&] { command = "search"; });
  file_sub("verify-cert", "check a Whitehead certificate carries X to Y", {"x", "y", "certificate"});
  auto* rep = app.add_subcommand("repro", "run a bundled reproduction target");
  std::string repro_name;
  bool repro_list = false;
  rep->add_option("name", repro_name, "target name");
  rep->add_flag("--list", repro_list, "list bundled targets");
  rep->add_option("--repro-dir", o.repro_dir, "directory of repro configs")->capture_default_str();
  rep->callback([&] { command = "repro"; });

  CLI11_PARSE(app, argc, argv);
  if (!targets_csv.empty()) {
    o.targets.clear();
    std::stringstream ss(targets_csv);
    for (std::string t; std::getline(ss, t, ',');)
      if (!t.empty()) o.targets.push_back(t);
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  std::string current_file;
  try {
    cohen::make_targets(o.targets);
    if (command == "repro") {
      if (repro_list || repro_name.empty()) {
        json names = repro_names(o.repro_dir);
        result.report = {{"tfv", 1}, {"targets", names}};
      } else {
        current_file = (fs::path(o.repro_dir) / (repro_name + ".json")).string();
        result = repro(repro_name, o);
      }
    } else {
      if (command == "search") files["config"] = search_config;
      if (command == "dim-evidence" && !dim_config.empty()) files["config"] = dim_config;
      for (const auto& [key, path] : files)
        if (!path.empty()) {
          current_file = path;
          docs[key] = load(path);
        }
      current_file.clear();
      result = run_command(command, docs, o);
    }
  } catch (const cohen::ParseError& e) {
    std::string file = current_file;
    if (file.empty())
      for (const auto& [key, d] : docs) file += (file.empty() ? "" : ",") + d.file;
    std::cerr << "error: " << (file.empty() ? "<args>" : file) << ": at '" << (e.path().empty() ? "/" : e.path())
              << "'" << (e.token().empty() ? "" : ": token '" + e.token() + "'") << ": " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const cohen::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "error: " << (current_file.empty() ? "<input>" : current_file) << ": " << e.what() << "\n";
    return kInputError;
  }

  if (o.timing)
    result.report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (o.pretty)
    render(std::cout, result.report, 0);
  else
    std::cout << result.report.dump(2) << "\n";
  return result.status;
}
