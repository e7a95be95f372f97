#include <catch_amalgamated.hpp>

#include "cohen/cohen.hpp"
#include "cohen/json_io.hpp"
#include "fixtures.hpp"

using namespace cohen;
using namespace cohen::testing;
using cohen::io::json;

namespace {

json d10_json() { return json::parse(R"({"generators": ["g", "h"], "relators": ["g^5", "h^2", "h g h = g^-1"]})"); }

template <typename F>
ParseError parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("presentations and tables round-trip", "[json]") {
  auto p = io::presentation_from_json(d10_json());
  REQUIRE(p.relators[2] == parse_word("h g h g", p.generators));
  auto again = io::presentation_from_json(io::to_json(p));
  REQUIRE(again == p);
  REQUIRE(io::to_json(p)["tfv"] == 1);

  auto d = d10();
  auto t = io::table_from_json(io::to_json(*d.table));
  REQUIRE(t == *d.table);
}

TEST_CASE("elements and matrices round-trip", "[json]") {
  auto d = d10();
  auto u = rothaus_unit(d);
  auto doc = io::element_from_json(io::to_json(d.presentation, u));
  REQUIRE(doc.element.coefficients() == u.coefficients());

  GroupRingMatrix m(d.table, 2);
  m(0, 0) = u;
  m(0, 1) = ring(d, {{-3, "h g"}});
  m(1, 1) = GroupRingElement::one(d.table);
  auto md = io::matrix_from_json(io::to_json(d.presentation, m));
  REQUIRE(md.matrix.size() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) REQUIRE(md.matrix(i, j).coefficients() == m(i, j).coefficients());
  REQUIRE(io::matrix_display(m)[1][0] == "0");

  // Large coefficients travel as strings.
  GroupRingElement big(d.table);
  big[0] = Integer("123456789012345678901234567890");
  auto bj = io::to_json(d.presentation, big);
  REQUIRE(bj["terms"][0][0].is_string());
  REQUIRE(io::element_from_json(bj).element.coefficients() == big.coefficients());
}

TEST_CASE("Cohen presentations and certificates round-trip", "[json]") {
  auto c5 = cyclic(5);
  CohenPresentation p{c5, {{{0, 0, 1}, {element(c5, "g"), 0, -1}, {element(c5, "g^2"), 0, 1}}}};
  auto j = io::to_json(p);
  REQUIRE(j["relators"][0][1] == json::array({"g", 1, -1}));
  auto q = io::cohen_from_json(j);
  REQUIRE(q == p);
  REQUIRE(io::relator_display(p, 0) == "x1 g x1^-1 g x1 g^-2");

  WhiteheadCertificate c{{moves::Stabilize{}, moves::SwapRows{0, 1}, moves::ScaleRow{1, -1, element(c5, "g^2")},
                          moves::AddRow{0, 1, ring(c5, {{2, "g"}})}, moves::Destabilize{}}};
  REQUIRE(io::certificate_from_json(c5, io::to_json(c, *c5.table)) == c);
}

TEST_CASE("parse errors cite path and token", "[json]") {
  auto bad_word = json::parse(R"({"generators": ["g"], "relators": ["g^5", "g k"]})");
  auto e = parse_error([&] { io::presentation_from_json(bad_word); });
  REQUIRE(e.path() == "/relators/1");
  REQUIRE(e.token() == "k");

  auto version = json::parse(R"({"tfv": 2, "generators": []})");
  REQUIRE(parse_error([&] { io::presentation_from_json(version); }).path() == "/tfv");

  auto cohen = json::parse(R"({"base": {"generators": ["g"], "relators": ["g^5"]}, "n": 1,
                               "relators": [[["", 2, 1]]]})");
  auto ce = parse_error([&] { io::cohen_from_json(cohen); });
  REQUIRE(ce.path() == "/relators/0/0/1");
  REQUIRE(ce.token() == "2");

  auto sign = json::parse(R"({"base": {"generators": ["g"], "relators": ["g^5"]}, "n": 1,
                              "relators": [[["g", 1, 0]]]})");
  REQUIRE(parse_error([&] { io::cohen_from_json(sign); }).path() == "/relators/0/0/2");

  auto missing = json::parse(R"({"base": {"generators": ["g"], "relators": ["g^5"]}, "n": 1})");
  REQUIRE(parse_error([&] { io::cohen_from_json(missing); }).path() == "/relators");

  auto infinite = json::parse(R"({"group": {"generators": ["g", "h"], "relators": []}, "terms": []})");
  REQUIRE(parse_error([&] { io::element_from_json(infinite); }).path() == "/group");

  auto move = json::parse(R"({"moves": [{"move": "twist"}]})");
  auto me = parse_error([&] { io::certificate_from_json(cyclic(5), move); });
  REQUIRE(me.path() == "/moves/0/move");
  REQUIRE(me.token() == "twist");
}

TEST_CASE("search configuration", "[json][search]") {
  auto j = json::parse(R"({"base": {"generators": ["g"], "relators": ["g^5"]},
                           "n_max": 1, "factors_max": 5, "conjugators": "all", "signs": "both",
                           "matrix": [[[[1, ""], [-1, "g"], [1, "g^2"]]]],
                           "enumeration_budget": 100000, "targets": ["S5", "A5"]})");
  auto doc = io::search_config_from_json(j);
  REQUIRE(doc.config.factors_max == 5);
  REQUIRE(doc.config.conjugators.empty());
  REQUIRE(doc.config.matrix_filter);
  REQUIRE((*doc.config.matrix_filter)(0, 0) == ring(doc.base, {{1, ""}, {-1, "g"}, {1, "g^2"}}));
  REQUIRE(doc.config.targets == std::vector<std::string>{"S5", "A5"});

  j["targets"] = {"S5", "Q7"};
  auto te = parse_error([&] { io::search_config_from_json(j); });
  REQUIRE(te.path() == "/targets/1");
  REQUIRE(te.token() == "Q7");
  j.erase("targets");
  j["signs"] = "some";
  REQUIRE(parse_error([&] { io::search_config_from_json(j); }).path() == "/signs");
  j["signs"] = "positive_only";
  j["conjugators"] = {"", "g^2"};
  auto pos = io::search_config_from_json(j);
  REQUIRE(pos.config.signs == SignMode::PositiveOnly);
  REQUIRE(pos.config.conjugators == std::vector<Element>{0, element(pos.base, "g^2")});
}

TEST_CASE("reports", "[json]") {
  auto c5 = cyclic(5);
  auto r = classify_extension(CohenPresentation{c5, {{{0, 0, 1}, {0, 0, 1}}}});
  auto j = io::to_json(r);
  REQUIRE(j["verdict"] == "proper");
  REQUIRE(j["order"].is_null());
  REQUIRE(j["witness"]["target"] == "S5");
  REQUIRE(j["witness"]["images"].size() == 2);
  REQUIRE(io::to_json(AbelianInvariants{1, {2, 4}}) == json::parse(R"({"free_rank": 1, "torsion": [2, 4]})"));
}
