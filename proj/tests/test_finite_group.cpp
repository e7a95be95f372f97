#include <catch_amalgamated.hpp>

#include "cohen/cohen.hpp"
#include "fixtures.hpp"

using namespace cohen;
using namespace cohen::testing;

TEST_CASE("canonical BFS order", "[group]") {
  auto c5 = cyclic(5);
  const auto& t = *c5.table;
  // e, g, g^-1, g^2, g^-2: generators first, then inverses.
  std::vector<std::string> names;
  for (Element e = 0; e < 5; ++e) names.push_back(format_word(t.canonical_word(e), t.generator_names()));
  REQUIRE(names == std::vector<std::string>{"", "g", "g^-1", "g^2", "g^-2"});
  REQUIRE(t.element_name(0) == "e");
}

TEST_CASE("word_to_element", "[group]") {
  auto c5 = cyclic(5);
  const auto& t = *c5.table;
  REQUIRE(t.evaluate(FreeWord()) == 0);
  // g^3 g^3 = g^6 = g
  REQUIRE(t.evaluate(parse_word("g^3 g^3", {"g"})) == t.generator_image(0));
  REQUIRE_THROWS_AS(t.evaluate(FreeWord::generator(1)), ValidationError);

  auto d = d10();
  REQUIRE(element(d, "h g h") == element(d, "g^-1"));
}

TEST_CASE("tables satisfy the group laws and canonical words round-trip", "[group][property]") {
  for (const auto& g : small_groups()) {
    const auto& t = *g.table;
    REQUIRE(t.verify_group_laws());
    for (Element e = 0; e < t.order(); ++e) REQUIRE(t.evaluate(t.canonical_word(e)) == e);
    // BFS words are shortest, so lengths never decrease along the order.
    for (Element e = 1; e < t.order(); ++e)
      REQUIRE(t.canonical_word(e).length() >= t.canonical_word(e - 1).length());
  }
}

TEST_CASE("permutation groups", "[group][targets]") {
  REQUIRE(symmetric_group(5).table->order() == 120);
  REQUIRE(alternating_group(5).table->order() == 60);
  REQUIRE(symmetric_group(4).table->order() == 24);
  REQUIRE(alternating_group(4).table->order() == 12);
  REQUIRE(symmetric_group(3).table->order() == 6);
  REQUIRE(cyclic_group(12).table->order() == 12);
  REQUIRE(dihedral_group(10).table->order() == 10);
  REQUIRE(symmetric_group(5).table->verify_group_laws());
  REQUIRE(parse_target("A5").name == "A5");
  REQUIRE_THROWS_AS(parse_target("X5"), ParseError);
  REQUIRE_THROWS_AS(parse_target("S"), ParseError);
}

TEST_CASE("table reconstruction rejects non-groups", "[group]") {
  auto c3g = cyclic(3);
  const auto& c3 = *c3g.table;
  std::vector<FreeWord> words;
  for (Element e = 0; e < 3; ++e) words.push_back(c3.canonical_word(e));
  auto ok = FiniteGroupTable::from_parts(c3.generator_names(), c3.table(), c3.generator_images(), words);
  REQUIRE(ok == c3);
  auto bad = c3.table();
  bad[4] = 0;
  REQUIRE_THROWS_AS(FiniteGroupTable::from_parts(c3.generator_names(), bad, c3.generator_images(), words),
                    ValidationError);
}
