// Acceptance gate: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail AC3,...] [--only AC1,...]
//
// Exit status is 0 when every criterion passes, except those named by
// --expect-fail, which must fail (an unexpected pass is also an error).

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cohen/cohen.hpp"
#include "cohen/json_io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cohen;
using namespace cohen::testing;

namespace {

struct Result {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

GroupRingElement c5_unit(const BaseGroup& c5) { return ring(c5, {{1, ""}, {-1, "g"}, {1, "g^2"}}); }

CohenPresentation c5_example(const BaseGroup& c5) {
  return {c5, {{{0, 0, 1}, {element(c5, "g"), 0, -1}, {element(c5, "g^2"), 0, 1}}}};
}

Result ac1() {
  auto t0 = Clock::now();
  auto d = d10();
  auto u = rothaus_unit(d);
  const bool unit = is_unit(u);
  const Integer det = determinant(regular_representation(u));
  const double s = seconds_since(t0);
  const bool pass = unit && (det == 1 || det == -1) && s < 1.0;
  return {pass, "is_unit=" + std::string(unit ? "true" : "false") + " det(rho)=" + det.str() + " in " + fmt_seconds(s) +
                    " (limit 1s)"};
}

Result ac2() {
  auto t0 = Clock::now();
  auto c5 = cyclic(5);
  auto x = matrix_of(c5_example(c5));
  const bool equal = x == GroupRingMatrix::scalar(c5_unit(c5));
  const bool inv = is_invertible(x);
  const double s = seconds_since(t0);
  return {equal && inv && s < 1.0, "X(P)=(" + x(0, 0).to_string() + ") equal=" + (equal ? "true" : "false") +
                                       " invertible=" + (inv ? "true" : "false") + " in " + fmt_seconds(s) +
                                       " (limit 1s)"};
}

Result ac3() {
  auto t0 = Clock::now();
  auto c5 = cyclic(5);
  auto p = c5_example(c5);
  auto report = classify_extension(p);
  const double s = seconds_since(t0);
  bool witness_ok = false;
  std::string detail = std::string("verdict=") + to_string(report.verdict);
  if (report.order) detail += " order=" + std::to_string(*report.order);
  if (report.witness) {
    auto s5 = symmetric_group(5);
    auto ext = extension_presentation(p);
    witness_ok = report.witness->target == "S5" && is_homomorphism(ext.presentation, *s5.table, report.witness->images) &&
                 generated_subgroup_order(*s5.table, report.witness->images) == 120;
    detail += " witness=" + report.witness->target;
  } else {
    detail += " witness=none";
  }
  // Independent diagnosis: is there any surjection onto S5 at all?
  auto ext = extension_presentation(p);
  auto s5 = symmetric_group(5);
  std::size_t onto = 0;
  for (const auto& h : find_homomorphisms(ext.presentation, *s5.table))
    if (generated_subgroup_order(*s5.table, h) == 120) ++onto;
  auto ab = abelianisation(ext.presentation);
  std::string torsion;
  for (const auto& t : ab.torsion) torsion += (torsion.empty() ? "" : "x") + ("C" + t.str());
  detail += "; surjections onto S5 by exhaustive search: " + std::to_string(onto) +
            "; abelianisation " + (ab.free_rank ? "Z^" + std::to_string(ab.free_rank) + " x " : "") +
            (torsion.empty() ? "1" : torsion) + " in " + fmt_seconds(s) + " (limit 60s)";
  return {report.verdict == Verdict::Proper && witness_ok && s < 60.0, detail};
}

Result ac4() {
  const std::string file = std::string(COHEN_REPRO_DIR) + "/c5-search.json";
  std::ifstream in(file);
  if (!in) return {false, "cannot open " + file};
  auto repro = io::json::parse(in);
  auto doc = io::search_config_from_json(repro.at("inputs").at("config"), "/inputs/config");
  auto t0 = Clock::now();
  auto a = search_trivial_admissible(doc.base, *doc.config.matrix_filter, doc.config);
  const double s = seconds_since(t0);
  auto b = search_trivial_admissible(doc.base, *doc.config.matrix_filter, doc.config);
  bool same = io::to_json(a, true) == io::to_json(b, true);
  bool example_found = false;
  for (const auto& c : a.candidates)
    if (c.presentation == c5_example(doc.base)) example_found = c.report.verdict == Verdict::Proper;
  const bool pass = a.trivial == 0 && same && !a.truncated && s < 600.0;
  return {pass, "examined=" + std::to_string(a.examined) + " matched=" + std::to_string(a.matched) +
                    " trivial=" + std::to_string(a.trivial) + " proper=" + std::to_string(a.proper) +
                    " unknown=" + std::to_string(a.unknown) + " deterministic=" + (same ? "true" : "false") +
                    " example relator proper=" + (example_found ? "true" : "false") + " in " + fmt_seconds(s) +
                    " (limit 600s)"};
}

// Units with nontrivial structure for the oracle comparison: trivial units
// times powers of known units where the group has them.
GroupRingElement random_unit(std::mt19937_64& rng, const BaseGroup& g) {
  GroupRingElement u = GroupRingElement::basis(g.table, static_cast<Element>(rng() % g.order()), rng() % 2 ? 1 : -1);
  if (g.order() == 5) {
    for (std::size_t k = rng() % 3; k-- > 0;) u = u * c5_unit(g);
  } else if (g.order() == 10 && g.presentation.generators.size() == 2) {
    if (rng() % 2) u = u * rothaus_unit(g);
  }
  return u;
}

Result ac5() {
  std::mt19937_64 rng(1001);
  auto groups = small_groups();
  std::size_t checked = 0, disagreements = 0, units = 0;
  for (std::size_t k = 0; checked < 10'000; ++k) {
    const auto& g = groups[k % groups.size()];
    GroupRingElement a = k % 10 == 0 ? random_unit(rng, g) : random_element(rng, g.table, 2, 0.4);
    const bool mine = is_unit(a);
    if (mine != oracle::is_unit_by_rational_solve(a)) ++disagreements;
    units += mine;
    ++checked;
  }
  return {disagreements == 0, std::to_string(checked) + " elements over " + std::to_string(groups.size()) +
                                  " groups of order <= 10, " + std::to_string(units) + " units, " +
                                  std::to_string(disagreements) + " disagreements"};
}

Result ac6() {
  std::mt19937_64 rng(2002);
  auto groups = small_groups();
  std::size_t trips = 0, trip_fail = 0, inverses = 0, inv_fail = 0, pairs = 0, rho_fail = 0;
  for (std::size_t k = 0; trips < 1000; ++k) {
    const auto& g = groups[k % groups.size()];
    auto x = random_matrix(rng, g.table, 1 + k % 3, 3);
    if (!(matrix_of(presentation_from_matrix(g, x)) == x)) ++trip_fail;
    ++trips;
  }
  for (std::size_t k = 0; inverses < 100; ++k) {
    const auto& g = groups[k % groups.size()];
    auto x = random_invertible(rng, g.table, 1 + k % 3, 6);
    auto xi = invert(x);
    if (!(x * xi == GroupRingMatrix::identity(g.table, x.size())) ||
        !(xi * x == GroupRingMatrix::identity(g.table, x.size())))
      ++inv_fail;
    ++inverses;
  }
  for (std::size_t k = 0; pairs < 10'000; ++k) {
    const auto& g = groups[k % groups.size()];
    auto a = random_element(rng, g.table, 3), b = random_element(rng, g.table, 3);
    const auto ra = regular_representation(a), rb = regular_representation(b);
    if (!(regular_representation(a * b) == ra * rb) || !(regular_representation(a + b) == ra + rb)) ++rho_fail;
    ++pairs;
  }
  return {trip_fail + inv_fail + rho_fail == 0,
          std::to_string(trips) + " matrix round trips (" + std::to_string(trip_fail) + " failed), " +
              std::to_string(inverses) + " inverse round trips (" + std::to_string(inv_fail) + " failed), " +
              std::to_string(pairs) + " rho pairs (" + std::to_string(rho_fail) + " failed)"};
}

Result ac7() {
  std::mt19937_64 rng(3003);
  std::vector<BaseGroup> bases{cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6), klein(), s3(), d10()};
  std::vector<CohenPresentation> corpus;
  for (const auto& b : bases) corpus.push_back({b, {{{0, 0, 1}}}});
  corpus.push_back(c5_example(bases[3]));
  corpus.push_back(presentation_from_matrix(bases.back(), GroupRingMatrix::scalar(rothaus_unit(bases.back()))));
  for (int k = 0; k < 200; ++k) {
    const auto& b = bases[static_cast<std::size_t>(k) % bases.size()];
    corpus.push_back(presentation_from_matrix(b, random_invertible(rng, b.table, 1 + k % 2, 3)));
  }
  std::size_t closed = 0, failures = 0, bijections = 0;
  std::string first_failure;
  auto fail = [&](const std::string& what) {
    if (failures++ == 0) first_failure = what;
  };
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& p0 = corpus[k];
    if (!is_admissible(p0)) {
      fail("corpus entry " + std::to_string(k) + " not admissible");
      continue;
    }
    auto p = normalize(p0).presentation;
    auto direct = extension_presentation(p);
    if (!(abelianisation(direct.presentation) == abelianisation(p.base.presentation)))
      fail("abelianisation differs for entry " + std::to_string(k));
    auto run = enumerate_cosets(direct.presentation, 20'000);
    if (!run.closed()) continue;
    ++closed;
    if (run.order() % p.base.order() != 0) fail("order not a multiple for entry " + std::to_string(k));
    auto tub = coset_enumerate(tubing_presentation(p).presentation, 20'000);
    if (!std::holds_alternative<FiniteGroupTable>(tub)) {
      fail("tubing form did not close for entry " + std::to_string(k));
      continue;
    }
    const auto& tt = std::get<FiniteGroupTable>(tub);
    if (tt.order() != run.order()) fail("tubing/direct orders differ for entry " + std::to_string(k));
    if (tt.order() <= 120) {
      if (exists_surjection(direct.presentation, tt))
        ++bijections;
      else
        fail("no bijection for entry " + std::to_string(k));
    }
  }
  return {failures == 0 && closed > 0,
          std::to_string(corpus.size()) + " admissible presentations, " + std::to_string(closed) + " closed, " +
              std::to_string(bijections) + " bijections exhibited, " + std::to_string(failures) + " failures" +
              (first_failure.empty() ? "" : " (first: " + first_failure + ")")};
}

Result ac8() {
  std::mt19937_64 rng(4004);
  auto groups = small_groups();
  std::size_t checked = 0, bad_form = 0, bad_cert = 0;
  for (std::size_t k = 0; checked < 1000; ++k) {
    const auto& g = groups[k % groups.size()];
    auto x = random_invertible(rng, g.table, 1 + k % 3, 6);
    auto p = presentation_from_matrix(g, x);
    for (auto& r : p.relators) std::shuffle(r.begin(), r.end(), rng);
    auto n = normalize(p);
    if (!n.presentation.is_normalized()) ++bad_form;
    if (!verify_certificate(matrix_of(p), matrix_of(n.presentation), n.certificate)) ++bad_cert;
    ++checked;
  }
  return {bad_form + bad_cert == 0, std::to_string(checked) + " random admissible presentations, " +
                                        std::to_string(bad_form) + " not normalized, " + std::to_string(bad_cert) +
                                        " certificates rejected"};
}

std::set<std::string> split(const std::string& csv) {
  std::set<std::string> out;
  std::stringstream ss(csv);
  for (std::string t; std::getline(ss, t, ',');)
    if (!t.empty()) out.insert(t);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> expect_fail, only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc)
      expect_fail = split(argv[++i]);
    else if (a == "--only" && i + 1 < argc)
      only = split(argv[++i]);
    else {
      std::cerr << "usage: acceptance [--expect-fail AC3,...] [--only AC1,...]\n";
      return 2;
    }
  }
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},
      {"AC5", ac5}, {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}};
  int unexpected = 0, passed = 0, total = 0;
  for (const auto& [name, run] : criteria) {
    if (!only.empty() && !only.count(name)) continue;
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    ++total;
    passed += r.pass;
    const bool expected_failure = expect_fail.count(name) > 0;
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << name << " " << r.detail
              << (expected_failure ? (r.pass ? "  (expected to fail: unexpected pass)" : "  (known failure)") : "")
              << std::endl;
    if (r.pass == expected_failure) ++unexpected;
  }
  std::cout << passed << "/" << total << " criteria passed" << std::endl;
  return unexpected == 0 ? 0 : 1;
}
