#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace pgroup;
using fixtures::gen;
using fixtures::named;

namespace {

Subgroup gens(const Group& g, std::initializer_list<int> idx) {
  std::vector<Elem> v;
  for (int i : idx) v.push_back(gen(g, i));
  return subgroup_generated(g, v);
}

bool cyclic(const Subgroup& s) {
  for (Elem x : s.elements())
    if (s.group().element_order(x) == s.order()) return true;
  return false;
}

}  // namespace

TEST_CASE("subgroup generated") {
  const Group& d8 = named("D8");
  CHECK(subgroup_generated(d8, std::vector<Elem>{}).is_trivial());
  CHECK(gens(d8, {3}).order() == 2);
  CHECK(gens(d8, {1, 2}).is_whole());
}

TEST_CASE("center and centralizer") {
  CHECK(center(named("C4xC2")).is_whole());
  const Group& d8 = named("D8");
  CHECK(center(d8) == gens(d8, {3}));
  CHECK(center(named("Heis27")).order() == 3);
  CHECK(centralizer(d8, gens(d8, {2})) == gens(d8, {2}));
}

TEST_CASE("derived subgroup") {
  CHECK(derived_subgroup(named("C2xC2xC2")).is_trivial());
  const Group& d8 = named("D8");
  CHECK(derived_subgroup(d8) == gens(d8, {3}));
  const Subgroup d = derived_subgroup(named("D16"));
  CHECK(d.order() == 4);
  CHECK(cyclic(d));
}

TEST_CASE("Frattini subgroup, both routes") {
  CHECK(frattini(named("C2xC2xC2")).is_trivial());
  const Group& d8 = named("D8");
  CHECK(frattini(d8) == gens(d8, {3}));
  CHECK(frattini(named("Q8")).order() == 2);
  for (const auto& g : fixtures::builtin_groups()) {
    CAPTURE(g->name());
    CHECK(frattini_by_maximals(*g) == frattini_by_powers(*g));
  }
}

TEST_CASE("second center") {
  CHECK(second_center(named("C4xC4")).is_whole());
  CHECK(second_center(named("D8")).is_whole());
  CHECK(second_center(named("D16")).order() == 4);
}

TEST_CASE("omega1") {
  CHECK(omega1(whole_group(named("C2xC2xC2"))).is_whole());
  const Group& d8 = named("D8");
  CHECK(omega1(gens(d8, {2})) == gens(d8, {3}));
  const Group& q8 = named("Q8");
  CHECK(omega1(center(q8)) == center(q8));
  CHECK_THROWS_AS(omega1(whole_group(q8)), std::invalid_argument);
}

TEST_CASE("maximal subgroups") {
  const GroupPtr c2 = fixtures::cyclic(2, 1);
  REQUIRE(maximal_subgroups(*c2).size() == 1);
  CHECK(maximal_subgroups(*c2)[0].is_trivial());
  const auto& d8 = maximal_subgroups(named("D8"));
  CHECK(d8.size() == 3);
  for (const auto& m : d8) CHECK(m.order() == 4);
  CHECK(maximal_subgroups(named("Heis27")).size() == 4);
}

TEST_CASE("maximal subgroup invariants on the corpus") {
  for (const auto& g : fixtures::builtin_groups()) {
    CAPTURE(g->name());
    const int p = g->prime();
    std::int64_t pd = 1;
    for (int i = 0; i < generator_rank(*g); ++i) pd *= p;
    CHECK(static_cast<std::int64_t>(maximal_subgroups(*g).size()) == (pd - 1) / (p - 1));
    for (const auto& m : maximal_subgroups(*g)) {
      CHECK(m.order() * p == g->order());
      CHECK(is_normal(m));
    }
    CHECK(center(*g).is_subset_of(second_center(*g)));
    CHECK(derived_subgroup(*g).is_subset_of(frattini(*g)));
  }
}

TEST_CASE("quotients") {
  const Group& d8 = named("D8");
  CHECK(quotient(d8, whole_group(d8)).quotient->order() == 1);
  const QuotientMap q = quotient(d8, center(d8));
  CHECK(q.quotient->order() == 4);
  CHECK(q.quotient->exponent() == 2);
  CHECK(q.quotient->is_abelian());
  // projection is a homomorphism with kernel N
  for (int x = 0; x < d8.order(); ++x) {
    CHECK((q.projection[x] == kIdentity) == center(d8).contains(static_cast<Elem>(x)));
    for (int y = 0; y < d8.order(); ++y)
      CHECK(q.projection[d8.mul(static_cast<Elem>(x), static_cast<Elem>(y))] ==
            q.quotient->mul(q.projection[x], q.projection[y]));
  }
  const Group& d16 = named("D16");
  CHECK(quotient(d16, center(d16)).quotient->order_histogram() == d8.order_histogram());
  CHECK_THROWS_AS(quotient(d8, gens(d8, {1})), std::invalid_argument);
}

TEST_CASE("subgroup as a group") {
  const Group& d16 = named("D16");
  const Subgroup m = gens(d16, {2});  // cyclic of order 8
  const SubgroupEmbedding e = subgroup_as_group(m);
  CHECK(e.group->order() == 8);
  CHECK(consistency_check(*e.group).consistent);
  for (int x = 0; x < e.group->order(); ++x)
    for (int y = 0; y < e.group->order(); ++y)
      CHECK(e.embed[e.group->mul(static_cast<Elem>(x), static_cast<Elem>(y))] ==
            d16.mul(e.embed[x], e.embed[y]));
}

TEST_CASE("abelian invariants") {
  const GroupPtr trivial = enumerate(PcPresentation::trivial_relations("1", 2, 0));
  CHECK(abelian_invariants(*trivial).exponents.empty());
  const Group& d8 = named("D8");
  CHECK(abelian_invariants(*quotient(d8, derived_subgroup(d8)).quotient).exponents == std::vector<int>{1, 1});
  const Group& c42 = named("C4xC2");
  const AbelianInvariants inv = abelian_invariants(c42);
  CHECK(inv.exponents == std::vector<int>{2, 1});
  CHECK(inv.order_histogram() == std::map<int, int>{{1, 1}, {2, 3}, {4, 4}});
  CHECK(c42.element_order(inv.basis[0]) == 4);
  CHECK_THROWS_AS(abelian_invariants(d8), std::invalid_argument);
  for (const auto& g : fixtures::builtin_groups()) {
    if (!g->is_abelian()) continue;
    CAPTURE(g->name());
    const AbelianInvariants a = abelian_invariants(*g);
    CHECK(a.order_histogram() == g->order_histogram());
    CHECK(a.order() == g->order());
    CHECK(subgroup_generated(*g, a.basis).is_whole());
  }
}

TEST_CASE("abelian direct factor split") {
  CHECK_FALSE(abelian_direct_factor_split(named("Q8")).has_value());
  CHECK_FALSE(abelian_direct_factor_split(named("D8")).has_value());

  const auto s = abelian_direct_factor_split(named("D8xC2"));
  REQUIRE(s.has_value());
  CHECK(s->abelian.order() == 2);
  CHECK(s->complement.order() == 8);
  const SubgroupEmbedding k = subgroup_as_group(s->complement);
  CHECK(k.group->order_histogram() == named("D8").order_histogram());
  CHECK_FALSE(abelian_direct_factor_split(*k.group).has_value());

  const auto e = abelian_direct_factor_split(named("C2xC2xC2"));
  REQUIRE(e.has_value());
  CHECK(e->abelian.is_whole());
  CHECK(e->complement.is_trivial());

  // Largest factor: Q8 x C2 x C2 splits off C2 x C2.
  const PcPresentation q8c4 =
      direct_product(named("Q8").presentation(), PcPresentation::trivial_relations("E", 2, 2), "Q8xC2xC2");
  const GroupPtr g = enumerate(q8c4);
  const auto big = abelian_direct_factor_split(*g);
  REQUIRE(big.has_value());
  CHECK(big->abelian.order() == 4);
}

TEST_CASE("central product decomposition") {
  // Not in Case 2A: the default scan refuses.
  CHECK_FALSE(central_product_decomposition(named("D8")).has_value());
  CHECK_FALSE(case2a_predicate(named("D16")));

  // D8 ∘ C4 with identified centres.
  const Group& pauli = named("Pauli");
  const auto cp = central_product_decomposition(pauli, PairScan::any_group);
  REQUIRE(cp.has_value());
  const auto zr = std::find_if(cp->identities.begin(), cp->identities.end(),
                               [](const IdentityCheck& c) { return c.id == "Z(R)=Z(G)"; });
  REQUIRE(zr != cp->identities.end());
  CHECK(zr->pass);
  CHECK(join(cp->r, cp->s).is_whole());
  CHECK(commutator_subgroup(cp->r, cp->s).is_trivial());
}
