#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace pgroup;
using fixtures::named;

namespace {

std::vector<PcPresentation> corpus_file(const std::string& file) {
  return load_presentations(PGROUP_CORPUS_DIR "/" + file);
}

bool passed(const TheoremReport& r, const std::string& id) {
  const Check* c = r.find(id);
  return c && c->pass;
}

}  // namespace

TEST_CASE("relations") {
  CHECK(holds(Relation::eq, 4, 4));
  CHECK_FALSE(holds(Relation::eq, 4, 5));
  CHECK(holds(Relation::ge, 5, 4));
  CHECK(holds(Relation::le, 4, 5));
  CHECK(holds(Relation::divides, 8, 24));
  CHECK_FALSE(holds(Relation::divides, 9, 6));
  CHECK_FALSE(holds(Relation::divides, 0, 6));
}

TEST_CASE("check ids are unique") {
  TheoremReport r;
  r.check("x", 1, 1);
  CHECK_THROWS_AS(r.check("x", 2, 2), std::logic_error);
}

TEST_CASE("classify") {
  const Classification c8 = classify(*fixtures::cyclic(2, 3));
  CHECK(c8.cyclic);
  CHECK_FALSE(c8.in_hypothesis());
  CHECK_FALSE(c8.case1.has_value());

  const Classification d8 = classify(named("D8"));
  CHECK(d8.abelian_maximal);
  CHECK(d8.elementary_abelian_centre);
  CHECK_FALSE(d8.centre_below_frattini);
  CHECK(d8.prior_literature);
  CHECK_FALSE(d8.case1.has_value());

  const Classification h = classify(named("Heis27"));
  CHECK(h.abelian_maximal);
  CHECK(h.class2);
  CHECK(h.in_hypothesis());

  const Classification d16 = classify(named("D16"));
  CHECK(d16.centre_below_frattini);
  CHECK(d16.case1 == true);
  CHECK(d16.case2 == false);
  CHECK_FALSE(d16.class2);
  CHECK(d16.nilpotency_class == 3);
}

TEST_CASE("case partition is exclusive and exhaustive") {
  for (const auto& g : fixtures::builtin_groups()) {
    CAPTURE(g->name());
    const Classification c = classify(*g);
    const bool scope = c.elementary_abelian_centre && c.centre_below_frattini;
    CHECK(c.case1.has_value() == scope);
    CHECK(c.prior_literature == (c.elementary_abelian_centre && !c.centre_below_frattini));
    if (!scope) continue;
    CHECK(*c.case1 + *c.case2 == 1);
    if (*c.case2) CHECK(*c.case2a + *c.case2b == 1);
    else CHECK(*c.case2a + *c.case2b == 0);
  }
}

TEST_CASE("powerful and p-central flags") {
  CHECK(classify(named("C4xC4")).powerful);
  CHECK(classify(named("C4xC4")).p_central);
  CHECK_FALSE(classify(named("D8")).powerful);
  CHECK_FALSE(classify(named("C4_by_C4")).powerful);  // exponent 4, so G^4 = 1
  CHECK(classify(named("M16")).powerful);
  CHECK_FALSE(classify(named("Heis27")).powerful);
  CHECK(classify(named("Heis27")).p_central == false);
  CHECK(classify(named("C3xC3xC3")).powerful);
}

TEST_CASE("abelian maximal chain: D16") {
  const TheoremReport r = verify_abelian_maximal_chain(named("D16"));
  for (const char* id : {"c1.commutator_set", "c1.derived_order", "c2.centre_index", "c3.abelianization",
                         "c4.z2_from_index", "c4.z2_from_centre", "c5.exponent", "c6.hom_vs_z2", "c8.divides"}) {
    CAPTURE(id);
    CHECK(passed(r, id));
  }
  const Check* z2 = r.find("c4.z2_from_centre");
  REQUIRE(z2);
  CHECK(z2->lhs == 4);
  const Check* hz = r.find("c6.hom_vs_z2");
  REQUIRE(hz);
  CHECK(hz->lhs == 4);
  CHECK(hz->rhs == 4);
  CHECK(r.witness["c6.case"].get<std::string>().front() == 'a');
  CHECK(r.ok());
}

TEST_CASE("abelian maximal chain: D8 skips the quotient identities") {
  const TheoremReport r = verify_abelian_maximal_chain(named("D8"));
  CHECK(passed(r, "c1.derived_order"));
  CHECK(passed(r, "c2.centre_index"));
  CHECK(passed(r, "c3.abelianization"));
  CHECK(passed(r, "c5.exponent"));
  CHECK(r.has_skip("c4"));
  CHECK(r.find("c4.z2_from_centre") == nullptr);
  const Check* d = r.find("c8.divides");
  REQUIRE(d);
  CHECK(d->rhs == 8);
  CHECK(r.ok());
}

TEST_CASE("abelian maximal chain: C4xC2") {
  const TheoremReport r = verify_abelian_maximal_chain(named("C4xC2"));
  for (const char* id : {"c2", "c3", "c4"}) CHECK(r.has_skip(id));
  CHECK(passed(r, "c8.divides"));
  CHECK(r.find("c7.otto"));
}

TEST_CASE("abelian maximal chain across the corpus") {
  for (const auto& g : fixtures::builtin_groups()) {
    CAPTURE(g->name());
    const TheoremReport r = verify_abelian_maximal_chain(*g);
    for (const auto& c : r.checks) {
      CAPTURE(c.id);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("elementary abelian centre chain: case 1") {
  for (const char* name : {"D16", "SD16", "Q16"}) {
    CAPTURE(name);
    const TheoremReport r = verify_elem_abelian_centre_chain(named(name));
    for (const char* id : {"cases.partition", "case1.aut_vs_hom", "case1.aut_vs_omega1", "case1.inn_intersection",
                           "case1.out_p_ge_Z"})
      CHECK(passed(r, id));
    CHECK(r.ok());
  }
  const TheoremReport d8 = verify_elem_abelian_centre_chain(named("D8"));
  CHECK(d8.has_skip("chain.elem_abelian_centre"));
  CHECK(d8.checks.empty());
}

TEST_CASE("elementary abelian centre chain across the corpus") {
  int in_scope = 0;
  for (const auto& g : fixtures::builtin_groups()) {
    CAPTURE(g->name());
    const TheoremReport r = verify_elem_abelian_centre_chain(*g);
    in_scope += r.find("cases.partition") != nullptr;
    for (const auto& c : r.checks) {
      CAPTURE(c.id);
      CHECK(c.pass);
    }
    if (classify(*g).case2b.value_or(false)) CHECK(r.has_skip("case2b"));
  }
  CHECK(in_scope >= 3);
}

TEST_CASE("divisibility") {
  const DivisibilityRecord d8 = verify_divisibility(named("D8"));
  CHECK(d8.aut_order == 8);
  CHECK(d8.divides);
  const DivisibilityRecord q8 = verify_divisibility(named("Q8"));
  CHECK(q8.aut_order == 24);
  CHECK(q8.p_part == 8);
  CHECK(q8.divides);
  const DivisibilityRecord c9 = verify_divisibility(*fixtures::cyclic(3, 2));
  CHECK(c9.aut_order == 6);
  CHECK_FALSE(c9.divides);
  const TheoremReport r = verify_presentation(fixtures::cyclic(3, 2)->presentation());
  CHECK(r.has_skip("divisibility"));
  CHECK(r.ok());
}

TEST_CASE("order 8 corpus") {
  const ReportSet s = run_corpus(corpus_file("order8.pc"));
  REQUIRE(s.reports.size() == 5);
  CHECK(s.failed_groups() == 0);
  CHECK(s.buckets.at("cyclic") == 1);
  CHECK(s.buckets.at("divisibility_checked") == 4);
  CHECK(s.buckets.at("divisibility_pass") == 4);
  CHECK(s.reports[0].has_skip("divisibility"));
}

TEST_CASE("order 27 corpus") {
  const ReportSet s = run_corpus(corpus_file("order27.pc"));
  REQUIRE(s.reports.size() == 5);
  CHECK(s.failed_groups() == 0);
  CHECK(s.buckets.at("divisibility_pass") == 4);
  int chains = 0;
  for (const auto& r : s.reports) {
    if (!r.flags || r.flags->abelian) continue;
    CAPTURE(r.name);
    CHECK(r.flags->abelian_maximal);
    CHECK(passed(r, "c8.divides"));
    CHECK(r.find("c2.centre_index"));
    ++chains;
  }
  CHECK(chains == 2);
}

TEST_CASE("verdicts are recomputable and the report carries its fields") {
  const ReportSet s = run_corpus(builtin_corpus(), 2);
  CHECK(s.failed_groups() == 0);
  for (const auto& r : s.reports)
    for (const auto& c : r.checks) CHECK(c.pass == holds(c.rel, c.lhs, c.rhs));
  const ordered_json j = to_json(s);
  const auto& g0 = j["groups"][0];
  for (const char* key : {"name", "p", "n", "flags", "checks", "aut_order", "divides", "skips"})
    CHECK(g0.contains(key));
  for (const auto& c : g0["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("lhs"));
    CHECK(c.contains("rhs"));
    CHECK(c.contains("pass"));
  }
  const std::string csv = to_csv(s);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(s.reports.size()) + 1);
}

TEST_CASE("worker count does not change the report") {
  const auto corpus = corpus_file("order16.pc");
  const std::string one = to_json(run_corpus(corpus, 1)).dump();
  const std::string four = to_json(run_corpus(corpus, 4)).dump();
  CHECK(one == four);
}

TEST_CASE("an inconsistent presentation is recorded and the run continues") {
  auto corpus = corpus_file("inconsistent.pc");
  const auto more = corpus_file("order8.pc");
  corpus.insert(corpus.end(), more.begin(), more.end());
  const ReportSet s = run_corpus(corpus);
  REQUIRE(s.reports.size() == 6);
  CHECK_FALSE(s.reports[0].consistent);
  CHECK_FALSE(s.reports[0].ok());
  CHECK(s.failed_groups() == 1);
  CHECK(s.buckets.at("failed") == 1);
  for (size_t i = 1; i < s.reports.size(); ++i) CHECK(s.reports[i].ok());
}

TEST_CASE("elementary abelian centre chain: case 2A, full witness") {
  const Group& g = named("D8xC2oB64a");
  const Classification c = classify(g);
  REQUIRE(c.case2a == true);
  const TheoremReport r = verify_elem_abelian_centre_chain(g);
  CHECK(r.witness["case2a.branch"] == "im_tau=C_p");
  for (const char* id : {"case2a.pair_found", "case2a.Z(R)=Z(G)", "case2a.S=C_G(R)", "case2a.RS=G", "case2a.out_mm",
                         "case2a.beta_found", "case2a.gamma_automorphism", "case2a.gamma_trivial_on_R",
                         "case2a.gamma_non_inner", "case2a.coset_refutation", "case2a.closure_ge_Z", "case2a.out_p_ge_Z"}) {
    CAPTURE(id);
    CHECK(passed(r, id));
  }
  CHECK(r.ok());
}

TEST_CASE("elementary abelian centre chain: case 2A, other branches") {
  const TheoremReport small = verify_elem_abelian_centre_chain(named("D8oB32a"));
  CHECK(small.witness["case2a.routing"] == "Gaschutz");
  CHECK(small.has_skip("case2a.witness"));
  CHECK(small.find("case2a.beta_found") == nullptr);
  CHECK(small.ok());

  for (const char* name : {"Q8oB32a", "Q8xC2oB64a"}) {
    CAPTURE(name);
    const TheoremReport r = verify_elem_abelian_centre_chain(named(name));
    CHECK(r.witness["case2a.branch"] == "im_tau=1");
    CHECK(passed(r, "case2a.out_mm"));
    CHECK(passed(r, "case2a.out_p_ge_Z"));
    CHECK(r.find("case2a.beta_found") == nullptr);
    CHECK(r.ok());
  }
}

TEST_CASE("elementary abelian centre chain: case 2B and order-32 case 1") {
  for (const char* name : {"B32a", "B64a"}) {
    CAPTURE(name);
    CHECK(classify(named(name)).case2b == true);
    const TheoremReport r = verify_elem_abelian_centre_chain(named(name));
    CHECK(r.has_skip("case2b"));
    CHECK(passed(r, "cases.partition"));
  }
  const TheoremReport c1 = verify_elem_abelian_centre_chain(named("Case1_32a"));
  CHECK(passed(c1, "case1.aut_vs_omega1"));
  CHECK(passed(c1, "case1.out_p_ge_Z"));
}
