#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace pgroup;

namespace {

const char* kD8 = R"(group D8
prime 2
rank 3
pow g2 = g3
conj g2 ^ g1 = g2*g3
)";

int error_line(const std::string& text) {
  try {
    parse_presentations(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("cyclic group of order 2 from defaults") {
  const PcPresentation p = parse_presentation("group C2\nprime 2\nrank 1");
  CHECK(p.name == "C2");
  CHECK(p.prime == 2);
  CHECK(p.rank == 1);
  CHECK(p.power[0].empty());
}

TEST_CASE("D8 source enumerates to 8 elements") {
  const PcPresentation p = parse_presentation(kD8);
  CHECK(p.power[1] == Word{{2, 1}});
  CHECK(p.conj[0][1] == Word{{1, 1}, {2, 1}});
  CHECK(enumerate(p)->order() == 8);
}

TEST_CASE("non-prime modulus is rejected") {
  CHECK_THROWS_AS(parse_presentation("group X\nprime 6\nrank 2"), ParseError);
  try {
    parse_presentation("group X\nprime 6\nrank 2");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("prime") != std::string::npos);
  }
}

TEST_CASE("malformed sources always produce a located diagnostic") {
  const std::vector<std::pair<std::string, int>> bad = {
      {"group A\nprime 2\nrank 3\nconj g2 ^ g1 = g1", 4},   // not a later generator
      {"group A\nprime 2\nrank 3\npow g2 = g2", 4},         // power must use later generators
      {"group A\nprime 2\nrank 3\npow g1 = g9", 4},         // out of range
      {"group A\nprime 2\nrank 3\npow g1 = g2^2", 4},       // exponent outside [0,p)
      {"group A\nprime 2\nrank 3\nconj g1 ^ g2 = g1", 4},   // i < j violated
      {"group A\nprime 2\nrank 3\nfrob g1 = g2", 4},        // unknown keyword
      {"group A\nprime 2\npow g1 = g2", 3},                 // relation before rank
      {"group A\nprime 2\nrank 13", 3},                     // rank above cap
      {"group A\nprime 2\nrank 0", 3},
      {"group A\nprime 2\nrank 3\npow g1 = g2\npow g1 = g3", 5},  // duplicate
      {"group A\nprime 2\nrank 3\npow g1 = g2 *", 4},       // dangling operator
      {"group A\nprime 2\nrank 3\npow g1 g2", 4},           // missing '='
      {"group A\nprime two\nrank 3", 2},
  };
  for (const auto& [text, line] : bad) {
    CAPTURE(text);
    CHECK(error_line(text) == line);
  }
}

TEST_CASE("serialization round-trips") {
  const PcPresentation d8 = parse_presentation(kD8);
  CHECK(parse_presentation(serialize(d8)) == d8);

  const PcPresentation q8 = parse_presentation(
      "group Q8\nprime 2\nrank 3\npow g1 = g3\npow g2 = g3\nconj g2 ^ g1 = g2*g3");
  CHECK(parse_presentation(serialize(q8)) == q8);
}

TEST_CASE("defaults are omitted from canonical text") {
  const PcPresentation e = PcPresentation::trivial_relations("E", 2, 3);
  const std::string text = serialize(e);
  CHECK(text.find("pow") == std::string::npos);
  CHECK(text.find("conj") == std::string::npos);
  CHECK(parse_presentation(text) == e);
}

TEST_CASE("every builtin presentation round-trips") {
  for (const auto& p : builtin_corpus()) {
    CAPTURE(p.name);
    CHECK(parse_presentation(serialize(p)) == p);
  }
  const auto all = builtin_corpus();
  CHECK(parse_presentations(serialize(all)) == all);
}

TEST_CASE("several groups per file, comments and exponents") {
  const auto list = parse_presentations(
      "# two groups\ngroup A\nprime 3\nrank 2\npow g1 = g2^2  # trailing comment\n\n"
      "group B\nprime 3\nrank 1\n");
  REQUIRE(list.size() == 2);
  CHECK(list[0].power[0] == Word{{1, 2}});
  CHECK(list[1].name == "B");
}

TEST_CASE("direct product presentation") {
  const PcPresentation d8 = parse_presentation(kD8);
  const PcPresentation c2 = PcPresentation::trivial_relations("C2", 2, 1);
  const PcPresentation p = direct_product(d8, c2, "D8xC2");
  CHECK(p.rank == 4);
  const GroupPtr g = enumerate(p);
  CHECK(g->order() == 16);
  CHECK(consistency_check(*g).consistent);
}
