#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace pgroup;
using fixtures::gen;
using fixtures::named;

namespace {

Subgroup maximal_generated(const Group& g, std::initializer_list<int> idx) {
  std::vector<Elem> v;
  for (int i : idx) v.push_back(gen(g, i));
  const Subgroup m = subgroup_generated(g, v);
  REQUIRE(m.order() * g.prime() == g.order());
  return m;
}

}  // namespace

TEST_CASE("abelian group: gamma trivial, tau is the p-th power") {
  const Group& g = named("C4xC2");
  for (const auto& m : maximal_subgroups(g)) {
    const WebbData d = webb_maps(g, m);
    CHECK(d.all_checks_pass());
    CHECK(d.ker_gamma == m);
    CHECK(d.im_gamma.is_trivial());
    const auto& zs = d.zm.elements();
    for (size_t i = 0; i < zs.size(); ++i) CHECK(d.tau[i] == g.pow(zs[i], 2));
  }
}

TEST_CASE("D8 with the cyclic maximal subgroup") {
  const Group& d8 = named("D8");
  const Subgroup m = maximal_generated(d8, {2, 3});
  const WebbData d = webb_maps(d8, m);
  CHECK(d.g == gen(d8, 1));
  CHECK(d.zm.order() == 4);
  CHECK(d.im_tau.is_trivial());
  CHECK(d.ker_gamma.order() == 2);
  CHECK(d.ker_gamma == center(d8));
  CHECK(d.all_checks_pass());

  const WebbVerdict v = webb_criterion(d8, m);
  CHECK(v.non_inner_exists);
  CHECK(v.predicted_out == 2);
  CHECK(v.oracle_out == 2);
  CHECK(v.representative_invariant);
  CHECK(out_order(d8) == 2);
}

TEST_CASE("Q8 containments") {
  const Group& q8 = named("Q8");
  const WebbData d = webb_maps(q8, maximal_generated(q8, {2, 3}));
  CHECK(d.all_checks_pass());
  CHECK(d.ker_gamma == center(q8));
  CHECK(d.im_tau.is_subset_of(d.ker_gamma));
}

TEST_CASE("guards") {
  const Group& d8 = named("D8");
  CHECK_THROWS_AS(webb_maps(d8, center(d8)), std::invalid_argument);
  const Subgroup m = maximal_generated(d8, {2, 3});
  CHECK_THROWS_AS(webb_maps(d8, m, gen(d8, 2)), std::invalid_argument);
  CHECK_THROWS_AS(webb_criterion(named("C4xC2"), maximal_subgroups(named("C4xC2"))[0]), PreconditionError);

  // Z(G) not inside Φ(G): some maximal subgroup misses Z(G).
  const Group& dc = named("D8xC2");
  int refused = 0;
  for (const auto& mm : maximal_subgroups(dc))
    if (!center(dc).is_subset_of(mm)) {
      CHECK_THROWS_AS(webb_criterion(dc, mm), PreconditionError);
      ++refused;
    }
  CHECK(refused > 0);
  CHECK_THROWS_AS(tau_m(named("C4xC2"), m, m), PreconditionError);
}

TEST_CASE("Webb suite over the corpus") {
  int verdict_false = 0;
  for (const auto& g : fixtures::builtin_groups()) {
    CAPTURE(g->name());
    const Subgroup z = center(*g);
    for (const auto& m : maximal_subgroups(*g)) {
      const WebbData d = webb_maps(*g, m);
      for (const auto& c : d.checks) {
        CAPTURE(c.id);
        CHECK(c.pass);
      }
      if (g->is_abelian() || !z.is_subset_of(m)) continue;
      const WebbVerdict v = webb_criterion(*g, m);
      CHECK(v.representative_invariant);
      if (v.non_inner_exists) {
        CHECK(v.oracle_out == v.predicted_out);
      } else {
        CHECK(v.oracle_out == 1);
        ++verdict_false;
      }
    }
  }
  MESSAGE("maximal subgroups with im tau = ker gamma: " << verdict_false);
}

TEST_CASE("p divides the image of Aut_Z in Out for non-abelian groups") {
  for (const auto& g : fixtures::builtin_groups()) {
    if (g->is_abelian()) continue;
    CAPTURE(g->name());
    const AutGroup a = restricted_aut(*g, whole_group(*g), center(*g));
    CHECK(a.out_image_order() % g->prime() == 0);
  }
}

TEST_CASE("tau_M on a central product pair") {
  const Group& pauli = named("Pauli");
  const auto cp = central_product_decomposition(pauli, PairScan::any_group);
  REQUIRE(cp.has_value());
  const TauMRecord r = tau_m(pauli, cp->m, cp->n);
  CHECK(r.zm_over_zg == 2);
  CHECK(r.g_over_n == 2);
  CHECK(r.im_tau_order <= 2);
  CHECK((r.branch == "im_tau=1" || r.branch == "im_tau=C_p"));
  const AutGroup oracle = restricted_aut(pauli, cp->m, cp->m);
  CHECK(oracle.out_image_order() == r.predicted_out_mm);
}

TEST_CASE("tau_M on the first case 2A group") {
  for (const auto& g : fixtures::builtin_groups()) {
    if (!classify(*g).case2a.value_or(false)) continue;
    CAPTURE(g->name());
    const auto cp = central_product_decomposition(*g);
    REQUIRE(cp.has_value());
    const TauMRecord r = tau_m(*g, cp->m, cp->n);
    CHECK(r.zm_over_zg == g->prime());
    CHECK(r.g_over_n == g->prime());
    CHECK(r.im_tau_order <= g->prime());
    CHECK(restricted_aut(*g, cp->m, cp->m).out_image_order() == r.predicted_out_mm);
    break;
  }
}
