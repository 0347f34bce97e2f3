#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace pgroup;
using fixtures::gen;
using fixtures::named;

namespace {

Word normal_word(const Group& g, Elem x) {
  Word w;
  const Exponents e = g.exponents(x);
  for (int i = 0; i < g.rank(); ++i)
    if (e[i]) w.push_back({i, e[i]});
  return w;
}

}  // namespace

TEST_CASE("collect") {
  const Group& d8 = named("D8");
  const PcPresentation& p = d8.presentation();
  CHECK(collect(p, {}) == Exponents{0, 0, 0});
  // g2 g1 = g1 g2^{g1} = g1 g2 g3
  CHECK(collect(p, Word{{1, 1}, {0, 1}}) == Exponents{1, 1, 1});
  for (int x = 0; x < d8.order(); ++x) {
    const Elem e = static_cast<Elem>(x);
    CHECK(collect(p, normal_word(d8, e)) == d8.exponents(e));
  }
}

TEST_CASE("collection budget turns runaway rewriting into an error") {
  const Group& d16 = named("D16");
  const Collector tight(d16.presentation(), 3);
  CHECK_THROWS_AS(tight.collect(Word{{3, 1}, {2, 1}, {1, 1}, {0, 1}, {0, 1}, {1, 1}}), CollectionError);
}

TEST_CASE("multiply") {
  const Group& d8 = named("D8");
  for (int x = 0; x < d8.order(); ++x) CHECK(d8.mul(kIdentity, static_cast<Elem>(x)) == x);
  CHECK(d8.mul(gen(d8, 1), gen(d8, 1)) == kIdentity);
  const Group& q8 = named("Q8");
  for (int x = 0; x < q8.order(); ++x) CHECK(q8.mul(static_cast<Elem>(x), q8.inv(static_cast<Elem>(x))) == kIdentity);
}

TEST_CASE("power and element order") {
  const Group& d8 = named("D8");
  CHECK(d8.element_order(kIdentity) == 1);
  CHECK(d8.element_order(gen(d8, 2)) == 4);
  CHECK(d8.pow(gen(d8, 2), 2) == gen(d8, 3));
  CHECK(d8.pow(gen(d8, 2), -1) == d8.inv(gen(d8, 2)));
  const Group& h = named("Heis27");
  for (int x = 1; x < h.order(); ++x) CHECK(h.element_order(static_cast<Elem>(x)) == 3);
}

TEST_CASE("enumerate") {
  const GroupPtr c2 = fixtures::from_text("group C2\nprime 2\nrank 1");
  CHECK(c2->order() == 2);
  CHECK(named("D8").order_histogram() == std::map<int, int>{{1, 1}, {2, 5}, {4, 2}});
  CHECK(named("Q8").order_histogram() == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate(PcPresentation::trivial_relations("big", 5, 6)), CapExceeded);
  CHECK_NOTHROW(enumerate(PcPresentation::trivial_relations("edge", 2, 12)));
}

TEST_CASE("consistency check") {
  const ConsistencyReport d8 = consistency_check(named("D8"));
  CHECK(d8.consistent);
  CHECK(d8.exhaustive);
  CHECK(d8.triples_checked == 512);
  CHECK(consistency_check(named("C2xC2xC2xC2")).consistent);

  const auto broken = load_presentations(PGROUP_CORPUS_DIR "/inconsistent.pc");
  REQUIRE(broken.size() == 1);
  const GroupPtr g = enumerate(broken[0]);
  const ConsistencyReport r = consistency_check(*g);
  CHECK_FALSE(r.consistent);
  REQUIRE(r.witness.has_value());
  const auto [x, y, z] = *r.witness;
  CHECK(g->mul(g->mul(x, y), z) != g->mul(x, g->mul(y, z)));
}

TEST_CASE("sampled associativity above the exhaustive threshold") {
  const GroupPtr g = enumerate(PcPresentation::trivial_relations("C2^11", 2, 11));
  const ConsistencyReport r = consistency_check(*g);
  CHECK(r.consistent);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.triples_checked == 1'000'000);
}

TEST_CASE("encoding is a bijection") {
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 4; ++n) {
      std::int64_t size = 1;
      for (int i = 0; i < n; ++i) size *= p;
      for (std::int64_t x = 0; x < size; ++x) CHECK(encode(decode(x, p, n), p) == x);
    }
}

TEST_CASE("table agrees with collection of concatenated normal forms") {
  // Independent of the table construction: every product is re-derived by
  // collecting the concatenation of the two normal-form words.
  for (const auto& g : fixtures::builtin_groups()) {
    if (g->order() > 27) continue;
    CAPTURE(g->name());
    const Collector c(g->presentation());
    int mismatches = 0;
    for (int x = 0; x < g->order(); ++x)
      for (int y = 0; y < g->order(); ++y) {
        Word w = normal_word(*g, static_cast<Elem>(x));
        const Word v = normal_word(*g, static_cast<Elem>(y));
        w.insert(w.end(), v.begin(), v.end());
        mismatches += g->element(c.collect(w)) != g->mul(static_cast<Elem>(x), static_cast<Elem>(y));
      }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("Lagrange on every builtin group") {
  for (const auto& g : fixtures::builtin_groups()) {
    CAPTURE(g->name());
    for (int x = 0; x < g->order(); ++x) CHECK(g->order() % g->element_order(static_cast<Elem>(x)) == 0);
  }
}
