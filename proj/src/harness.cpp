#include "pgroup/harness.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pgroup {

namespace {

std::int64_t ipow(std::int64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

std::int64_t as_int(bool b) { return b ? 1 : 0; }

/// Set equality recorded as |A ∩ B| = |A ∪ B|.
void set_check(TheoremReport& rep, std::string id, const Subgroup& a, const Subgroup& b) {
  std::int64_t both = 0, either = 0;
  for (size_t x = 0; x < a.mask().size(); ++x) {
    both += a.mask()[x] && b.mask()[x];
    either += a.mask()[x] || b.mask()[x];
  }
  rep.check(std::move(id), both, either);
}

/// |A ⊆ B| recorded as the number of elements of A outside B.
void subset_check(TheoremReport& rep, std::string id, const Subgroup& a, const Subgroup& b) {
  std::int64_t outside = 0;
  for (Elem x : a.elements()) outside += !b.contains(x);
  rep.check(std::move(id), outside, 0);
}

const Classification& flags_of(const Group& g, TheoremReport& rep) {
  if (!rep.flags) rep.flags = classify(g);
  return *rep.flags;
}

std::int64_t aut_order(const Group& g, TheoremReport& rep) {
  if (!rep.divisibility) rep.divisibility = verify_divisibility(g);
  return rep.divisibility->aut_order;
}

std::int64_t out_order_cached(const Group& g, TheoremReport& rep) {
  return aut_order(g, rep) / (g.order() / center(g).order());
}

int first_index(const std::vector<Subgroup>& list, auto pred) {
  for (size_t i = 0; i < list.size(); ++i)
    if (pred(list[i])) return static_cast<int>(i);
  return -1;
}

/// Value table of the homomorphism G -> G with given images of the basis of
/// G/G' (a map through coordinates).
std::vector<Elem> hom_table(const Group& g, const HomFamily& fam, std::span<const Elem> images) {
  std::vector<Elem> t(g.order());
  for (int x = 0; x < g.order(); ++x) {
    const auto& c = fam.coordinate_table[fam.abelianization.projection[x]];
    Elem v = kIdentity;
    for (size_t i = 0; i < c.size(); ++i) v = g.mul(v, g.pow(images[i], c[i]));
    t[x] = v;
  }
  return t;
}

/// Number of failures of f(xs) = f(x) f(s) over x in G, s a generator, plus
/// values outside the target.
std::int64_t hom_defects(const Group& g, const std::vector<Elem>& f, const Subgroup& target) {
  std::int64_t bad = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (!target.contains(f[x])) ++bad;
    for (Elem s : g.generators())
      if (f[g.mul(static_cast<Elem>(x), s)] != g.mul(f[x], f[s])) ++bad;
  }
  return bad;
}

/// Enumerates tuples where entry i ranges over options[i].
template <typename Visit>
void for_each_tuple(const std::vector<std::vector<Elem>>& options, Visit&& visit) {
  const size_t r = options.size();
  for (const auto& o : options)
    if (o.empty()) return;
  std::vector<size_t> pick(r, 0);
  std::vector<Elem> t(r);
  while (true) {
    for (size_t i = 0; i < r; ++i) t[i] = options[i][pick[i]];
    visit(t);
    size_t i = 0;
    while (i < r && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == r) break;
  }
}

constexpr std::int64_t kFamilyCap = 1 << 16;
constexpr std::int64_t kDualOracleLeaves = 1 << 20;
constexpr size_t kClosureCap = 200000;

// Case (a): g1G' -> any z in Z(G), g2G' -> any element of G' ∩ Z(G), the rest trivial.
void family_case_a(const Group& g, TheoremReport& rep, const HomFamily& fam, const Subgroup& z,
                   const Subgroup& dz, std::int64_t z2) {
  const int d = fam.source_basis.rank();
  std::vector<std::vector<Elem>> options(d, std::vector<Elem>{kIdentity});
  options[0] = z.elements();
  options[1] = dz.elements();
  std::set<std::vector<Elem>> distinct;
  std::int64_t defects = 0;
  for_each_tuple(options, [&](const std::vector<Elem>& t) {
    auto f = hom_table(g, fam, t);
    defects += hom_defects(g, f, z);
    distinct.insert(std::move(f));
  });
  const std::int64_t size = static_cast<std::int64_t>(z.order()) * dz.order();
  rep.check("c6a.homomorphisms", defects, 0);
  rep.check("c6a.family_size", static_cast<std::int64_t>(distinct.size()), size);
  rep.check("c6a.family_vs_z2", size, z2, Relation::ge);
}

// Case (b): g_iG' -> z1^{b_i}, times g_iG' -> elements of order p in <z2..zr>.
void family_case_b(const Group& g, TheoremReport& rep, const HomFamily& fam, const Subgroup& z,
                   const Subgroup& dz, std::int64_t z2) {
  const int p = g.prime();
  const AbelianInvariants zinv = abelian_invariants(z);
  const int d = fam.source_basis.rank();
  const int r = zinv.rank();
  const Elem z1 = zinv.basis[0];
  const Group& q = *fam.abelianization.quotient;

  std::vector<std::vector<Elem>> first(d);
  for (int i = 0; i < d; ++i) {
    const int oi = q.element_order(fam.source_basis.basis[i]);
    for (int b = 0; b < g.element_order(z1); ++b) {
      const Elem v = g.pow(z1, b);
      if (oi % g.element_order(v) == 0) first[i].push_back(v);
    }
  }
  std::vector<Elem> rest(zinv.basis.begin() + 1, zinv.basis.end());
  const Subgroup w = subgroup_generated(g, rest);
  const Subgroup w1 = omega1(w);
  std::vector<std::vector<Elem>> second(d, w1.elements());

  std::int64_t n1 = 1, n2 = 1;
  for (int i = 0; i < d; ++i) {
    n1 *= static_cast<std::int64_t>(first[i].size());
    n2 *= static_cast<std::int64_t>(second[i].size());
  }
  const std::int64_t abel = q.order();
  rep.check("c6b.family1_size", n1, abel);
  rep.check("c6b.family2_size", n2, ipow(p, (r - 1) * d));
  rep.check("c6b.family2_vs_omega", n2, omega1(z).order() / p, Relation::ge);
  rep.check("c6b.omega_vs_derived", omega1(z).order(), dz.order(), Relation::ge);
  rep.check("c6b.z2_from_index", abel * dz.order() / p, z2);
  rep.check("c6b.product_vs_z2", n1 * n2, z2, Relation::ge);

  if (n1 * n2 > kFamilyCap) {
    rep.skip("c6b.product_distinct", "product family larger than the construction cap");
    return;
  }
  std::vector<std::vector<Elem>> f1, f2;
  std::int64_t defects = 0;
  for_each_tuple(first, [&](const std::vector<Elem>& t) {
    f1.push_back(hom_table(g, fam, t));
    defects += hom_defects(g, f1.back(), z);
  });
  for_each_tuple(second, [&](const std::vector<Elem>& t) {
    f2.push_back(hom_table(g, fam, t));
    defects += hom_defects(g, f2.back(), z);
  });
  std::set<std::vector<Elem>> products;
  for (const auto& a : f1)
    for (const auto& b : f2) {
      std::vector<Elem> f(g.order());
      for (int x = 0; x < g.order(); ++x) f[x] = g.mul(a[x], b[x]);
      products.insert(std::move(f));
    }
  rep.check("c6b.homomorphisms", defects, 0);
  rep.check("c6b.product_distinct", static_cast<std::int64_t>(products.size()), n1 * n2);
}

/// Otto's reduction when an abelian direct factor exists, Adney-Yen otherwise.
void reduction_checks(const Group& g, TheoremReport& rep, const std::string& prefix) {
  const auto split = abelian_direct_factor_split(g);
  if (split) {
    const SubgroupEmbedding k = subgroup_as_group(split->complement, g.name() + "_K");
    const std::int64_t aut_k = automorphism_count(*k.group);
    const std::int64_t lhs = split->abelian.order() * p_part(aut_k, g.prime());
    rep.witness[prefix + ".otto"] = {{"H", split->abelian.order()},
                                     {"K", split->complement.order()},
                                     {"aut_K", aut_k}};
    rep.check(prefix + ".otto", lhs, aut_order(g, rep), Relation::divides);
    return;
  }
  if (g.is_abelian()) return;
  const AdneyYenRecord ay = adney_yen_check(g);
  rep.check(prefix + ".adney_yen", ay.autz_order, ay.hom_count);
  if (ay.bijective_from_homs >= 0)
    rep.check(prefix + ".central_homs_bijective", ay.bijective_from_homs, ay.hom_count);
}

std::vector<Elem> compose_tables(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> c(a.size());
  for (size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
  return c;
}

/// Witness chain for Case 2A with |Z(G)| > p and im tau_M of order p.
void case2a_witness(const Group& g, TheoremReport& rep, const CentralProduct& cp,
                    const AutGroup& aut_mm) {
  const int p = g.prime();
  const Subgroup z = center(g);

  // beta: non-inner, p-power order, fixing Z(S).
  const SubgroupEmbedding s = subgroup_as_group(cp.s, g.name() + "_S");
  const Group& sg = *s.group;
  const Subgroup zs = center(sg);
  const AutGroup aut_zs = search_automorphisms(sg, AutConstraints{nullptr, &zs}, true);
  rep.witness["case2a.out_z_S"] = aut_zs.out_image_order();
  std::optional<Automorphism> beta;
  for (std::int64_t i = 0; i < aut_zs.size() && !beta; ++i) {
    Automorphism a = aut_zs.at(i);
    const int o = automorphism_order(a);
    if (p_part(o, p) == o && !is_inner(a)) beta = std::move(a);
  }
  rep.check("case2a.beta_found", as_int(beta.has_value()), 1);
  if (!beta) return;
  rep.witness["case2a.beta_order"] = automorphism_order(*beta);

  // gamma(r s) = r beta(s).
  std::vector<int> gamma(g.order(), -1);
  std::int64_t conflicts = 0;
  for (Elem r : cp.r.elements())
    for (Elem x : cp.s.elements()) {
      const Elem y = g.mul(r, x);
      const Elem img = g.mul(r, s.embed[(*beta)(static_cast<Elem>(s.restriction[x]))]);
      if (gamma[y] < 0)
        gamma[y] = img;
      else if (gamma[y] != img)
        ++conflicts;
    }
  std::int64_t unassigned = std::count(gamma.begin(), gamma.end(), -1);
  rep.check("case2a.gamma_well_defined", conflicts + unassigned, 0);
  if (conflicts + unassigned != 0) return;
  Automorphism gm{&g, std::vector<Elem>(gamma.begin(), gamma.end())};
  rep.check("case2a.gamma_automorphism", as_int(is_automorphism(g, gm.images)), 1);
  std::int64_t moved_r = 0, moved_z = 0, moved_m = 0;
  for (Elem r : cp.r.elements()) moved_r += gm(r) != r;
  for (Elem x : z.elements()) moved_z += gm(x) != x;
  for (Elem x : cp.m.elements()) moved_m += gm(x) != x;
  rep.check("case2a.gamma_trivial_on_R", moved_r, 0);
  rep.check("case2a.gamma_fixes_Z", moved_z, 0);
  rep.check("case2a.gamma_not_in_aut_M", moved_m, 1, Relation::ge);
  rep.check("case2a.gamma_non_inner", as_int(is_inner(gm)), 0);
  const int gamma_order = automorphism_order(gm);
  rep.witness["case2a.gamma_order"] = gamma_order;
  rep.check("case2a.gamma_p_power", p_part(gamma_order, p), gamma_order);

  // Uniqueness: automorphisms fixing R pointwise that agree with beta on S.
  std::int64_t extensions = 0;
  for_each_automorphism(g, AutConstraints{nullptr, &cp.r}, [&](const Automorphism& a) {
    bool same = true;
    for (Elem x : cp.s.generators())
      if (a(x) != gm(x)) same = false;
    extensions += same;
    return true;
  });
  rep.check("case2a.gamma_unique", extensions, 1);

  // No rho in Aut_M^M(G) and x in G with gamma = rho ∘ conj_x.
  std::int64_t factorizations = 0;
  for (int x = 0; x < g.order(); ++x) {
    const Automorphism rho = compose(gm, conjugation(g, g.inv(static_cast<Elem>(x))));
    bool in_mm = true;
    for (Elem y : g.generators())
      if (!cp.m.contains(g.mul(rho(y), g.inv(y)))) in_mm = false;
    for (Elem y : cp.m.generators())
      if (rho(y) != y) in_mm = false;
    factorizations += in_mm;
  }
  rep.check("case2a.coset_refutation", factorizations, 0);

  // |<gamma-bar, Out_M^M(G)>| through the closure of <gamma, Aut_M^M(G), Inn(G)>.
  std::vector<std::vector<Elem>> gens{gm.images};
  for (std::int64_t i = 0; i < aut_mm.size(); ++i) gens.push_back(aut_mm.at(i).images);
  for (Elem x : g.generators()) gens.push_back(conjugation(g, x).images);
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> queue{identity_automorphism(g).images};
  seen.insert(queue.front());
  for (size_t i = 0; i < queue.size(); ++i)
    for (const auto& s2 : gens) {
      auto c = compose_tables(queue[i], s2);
      if (seen.insert(c).second) {
        queue.push_back(std::move(c));
        if (queue.size() > kClosureCap)
          throw CapExceeded(g.name() + ": closure of <gamma, Out_M^M> exceeded cap");
      }
    }
  const std::int64_t inn = g.order() / z.order();
  const std::int64_t closure_out = static_cast<std::int64_t>(queue.size()) / inn;
  const std::int64_t out = out_order_cached(g, rep);
  rep.witness["case2a.closure_out_order"] = closure_out;
  rep.check("case2a.closure_over_out_mm", closure_out, p * aut_mm.out_image_order(), Relation::ge);
  rep.check("case2a.closure_p_group", p_part(closure_out, p), closure_out);
  rep.check("case2a.closure_divides_out", closure_out, out, Relation::divides);
  rep.check("case2a.closure_ge_Z", closure_out, z.order(), Relation::ge);
  rep.check("case2a.out_p_ge_Z", p_part(out, p), z.order(), Relation::ge);
}

}  // namespace

Classification classify(const Group& g) {
  Classification c;
  const int p = g.prime();
  c.abelian = g.is_abelian();
  c.generator_rank = g.order() == 1 ? 0 : generator_rank(g);
  c.cyclic = c.generator_rank <= 1;
  c.order_at_least_p3 = g.order() >= ipow(p, 3);
  c.nilpotency_class = nilpotency_class(g);
  if (g.order() == 1) return c;

  const Subgroup z = center(g);
  const Subgroup phi = frattini(g);
  const Subgroup der = derived_subgroup(g);
  const auto& maxes = maximal_subgroups(g);
  for (const Subgroup& m : maxes)
    if (is_abelian(m)) c.abelian_maximal = true;
  c.elementary_abelian_centre = exponent(z) <= p;
  c.centre_below_frattini = z.is_subset_of(phi) && z.order() < phi.order();
  c.prior_literature = c.elementary_abelian_centre && !c.centre_below_frattini;
  if (c.elementary_abelian_centre && c.centre_below_frattini) {
    bool some_equal = false, all_above = true;
    for (const Subgroup& m : maxes) {
      const Subgroup zm = center_of(m);
      if (zm == z) some_equal = true;
      if (!(z.is_subset_of(zm) && zm.order() > z.order())) all_above = false;
    }
    c.case1 = some_equal;
    c.case2 = all_above;
    const bool phi_self = centralizer(g, center_of(phi)) == phi;
    c.case2a = all_above && !phi_self;
    c.case2b = all_above && phi_self;
  }
  c.powerful = der.is_subset_of(power_subgroup(g, p == 2 ? 4 : p));
  c.p_central = omega(g, p == 2 ? 2 : 1).is_subset_of(z);
  c.class2 = der.is_subset_of(z);
  return c;
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::eq: return "eq";
    case Relation::ge: return "ge";
    case Relation::le: return "le";
    case Relation::divides: return "divides";
  }
  return "?";
}

bool holds(Relation r, std::int64_t lhs, std::int64_t rhs) {
  switch (r) {
    case Relation::eq: return lhs == rhs;
    case Relation::ge: return lhs >= rhs;
    case Relation::le: return lhs <= rhs;
    case Relation::divides: return lhs != 0 && rhs % lhs == 0;
  }
  return false;
}

bool TheoremReport::check(std::string id, std::int64_t lhs, std::int64_t rhs, Relation rel) {
  if (find(id)) throw std::logic_error("check id recorded twice: " + id);
  const bool pass = holds(rel, lhs, rhs);
  checks.push_back(Check{std::move(id), lhs, rhs, rel, pass});
  return pass;
}

void TheoremReport::skip(std::string id, std::string reason) {
  skips.push_back(Skip{std::move(id), std::move(reason)});
}

const Check* TheoremReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

bool TheoremReport::has_skip(const std::string& id) const {
  return std::any_of(skips.begin(), skips.end(), [&](const Skip& s) { return s.id == id; });
}

int TheoremReport::failed_checks() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

DivisibilityRecord verify_divisibility(const Group& g) {
  DivisibilityRecord d;
  d.group_order = g.order();
  d.aut_order = automorphism_count(g);
  d.p_part = p_part(d.aut_order, g.prime());
  d.divides = d.aut_order % d.group_order == 0;
  return d;
}

void verify_abelian_maximal_chain(const Group& g, TheoremReport& rep) {
  const Classification& cls = flags_of(g, rep);
  if (cls.cyclic) return rep.skip("chain.abelian_maximal", "cyclic group: outside hypothesis");
  if (!cls.order_at_least_p3) return rep.skip("chain.abelian_maximal", "order below p^3");
  if (!cls.abelian_maximal) return rep.skip("chain.abelian_maximal", "no abelian maximal subgroup");

  const int p = g.prime();
  const Subgroup z = center(g);
  const Subgroup der = derived_subgroup(g);
  const Subgroup z2 = second_center(g);
  const Subgroup dz = intersection(der, z);
  const auto& maxes = maximal_subgroups(g);
  const int ai = first_index(maxes, [](const Subgroup& m) { return is_abelian(m); });
  const Subgroup& a = maxes[ai];
  int xi = 0;
  while (a.contains(static_cast<Elem>(xi))) ++xi;
  const Elem x = static_cast<Elem>(xi);
  rep.witness["abelian_maximal"] = {{"index", ai}, {"order", a.order()}, {"g", xi}};

  // c1: G' = {[a, g] : a in A} as sets, and |G'| = |A : A ∩ Z(G)|.
  std::vector<char> cm(g.order(), 0);
  for (Elem y : a.elements()) cm[g.comm(y, x)] = 1;
  std::int64_t in_both = 0, in_either = 0;
  for (int y = 0; y < g.order(); ++y) {
    in_both += cm[y] && der.contains(static_cast<Elem>(y));
    in_either += cm[y] || der.contains(static_cast<Elem>(y));
  }
  rep.check("c1.commutator_set", in_both, in_either);
  rep.check("c1.derived_order", der.order(), a.order() / intersection(a, z).order());

  if (cls.abelian) {
    for (const char* id : {"c2", "c3", "c4", "c5", "c6"}) rep.skip(id, "G abelian");
  } else {
    rep.check("c2.centre_index", g.order() / z.order(), static_cast<std::int64_t>(p) * der.order());
    rep.check("c3.abelianization", g.order() / der.order(), static_cast<std::int64_t>(p) * z.order());
    if (cls.class2) {
      rep.skip("c4", "G/Z(G) abelian (class 2): the quotient identity needs a non-abelian quotient");
    } else {
      const QuotientMap h = quotient(g, z);
      const Group& hq = *h.quotient;
      rep.check("c4.quotient_centre_index", hq.order() / derived_subgroup(hq).order(),
                static_cast<std::int64_t>(p) * center(hq).order());
      rep.check("c4.z2_from_index", static_cast<std::int64_t>(p) * z2.order(),
                static_cast<std::int64_t>(dz.order()) * (g.order() / der.order()));
      rep.check("c4.z2_from_centre", z2.order(), static_cast<std::int64_t>(dz.order()) * z.order());
    }
    rep.check("c5.exponent", exponent(dz), p);
    // [a,g] central implies [a,g]^p = g^{-p} (g [a,g])^p = 1.
    std::int64_t bad = 0;
    const Elem gp_inv = g.inv(g.pow(x, p));
    for (Elem y : a.elements()) {
      const Elem c = g.comm(y, x);
      if (g.mul(gp_inv, g.pow(g.mul(x, c), p)) != kIdentity) ++bad;
    }
    rep.check("c5.norm_kills_commutators", bad, 0);

    if (cls.class2) {
      rep.skip("c6", "G/Z(G) abelian (class 2): |Hom(G/G',Z(G))| >= |Z_2(G)| is not claimed");
    } else {
      const HomFamily fam = abelianization_family(g);
      const AbelianInvariants zinv = abelian_invariants(z);
      const std::int64_t exp_q = fam.source_basis.exponent();
      const std::int64_t exp_z = zinv.exponent();
      rep.check("c6.d_at_least_2", fam.source_basis.rank(), 2, Relation::ge);
      rep.check("c6.hom_vs_z2", hom_count_abelian(fam.source_basis, zinv), z2.order(), Relation::ge);
      std::string branch;
      if (exp_q >= exp_z) {
        family_case_a(g, rep, fam, z, dz, z2.order());
        branch = "a";
      }
      if (exp_q <= exp_z) {
        family_case_b(g, rep, fam, z, dz, z2.order());
        branch += branch.empty() ? "b" : "+b";
      }
      rep.witness["c6.case"] = branch;
    }
  }
  reduction_checks(g, rep, "c7");
  rep.check("c8.divides", g.order(), aut_order(g, rep), Relation::divides);
}

TheoremReport verify_abelian_maximal_chain(const Group& g) {
  TheoremReport rep;
  rep.name = g.name();
  verify_abelian_maximal_chain(g, rep);
  return rep;
}

void verify_elem_abelian_centre_chain(const Group& g, TheoremReport& rep) {
  const Classification& cls = flags_of(g, rep);
  if (!cls.elementary_abelian_centre)
    return rep.skip("chain.elem_abelian_centre", "centre not elementary abelian");
  if (!cls.centre_below_frattini)
    return rep.skip("chain.elem_abelian_centre", "Z(G) not below Φ(G): prior literature");

  const int p = g.prime();
  const Subgroup z = center(g);
  const auto& maxes = maximal_subgroups(g);
  rep.check("cases.partition", as_int(*cls.case1) + as_int(*cls.case2a) + as_int(*cls.case2b), 1);

  if (*cls.case1) {
    const int mi = first_index(maxes, [&](const Subgroup& m) { return center_of(m) == z; });
    const Subgroup& m = maxes[mi];
    const Subgroup zm = center_of(m);
    rep.witness["case"] = "1";
    rep.witness["case1.maximal"] = mi;
    const AutGroup x = search_automorphisms(g, AutConstraints{&z, &m}, true);
    AbelianInvariants cp;
    cp.prime = p;
    cp.exponents = {1};
    rep.check("case1.aut_vs_hom", x.order(), hom_count_abelian(cp, abelian_invariants(zm)));
    rep.check("case1.aut_vs_omega1", x.order(), omega1(zm).order());
    rep.check("case1.inn_intersection", x.inner_count(), 1);
    rep.check("case1.nontrivial", x.order(), p, Relation::ge);
    std::vector<Automorphism> members;
    for (std::int64_t i = 0; i < x.size(); ++i) members.push_back(x.at(i));
    std::int64_t bad = 0;
    for (const auto& a : members) {
      if (p % automorphism_order(a) != 0) ++bad;
      for (const auto& b : members)
        if (!(compose(a, b) == compose(b, a))) ++bad;
    }
    rep.check("case1.elementary_abelian", bad, 0);
    rep.check("case1.aut_eq_Z", x.order(), z.order());
    rep.check("case1.out_p_ge_Z", p_part(out_order_cached(g, rep), p), z.order(), Relation::ge);
    return;
  }
  if (*cls.case2b) {
    rep.witness["case"] = "2B";
    rep.skip("case2b", "Case 2B: no divisibility argument here; oracle verdict only");
    return;
  }

  rep.witness["case"] = "2A";
  const auto cp = central_product_decomposition(g);
  rep.check("case2a.pair_found", cp ? static_cast<std::int64_t>(cp->qualifying_pairs.size()) : 0, 1,
            Relation::ge);
  if (!cp) return;
  ordered_json pairs = ordered_json::array();
  for (auto [i, j] : cp->qualifying_pairs) pairs.push_back({i, j});
  rep.witness["case2a.pairs"] = pairs;
  rep.witness["case2a.M"] = cp->m_index;
  rep.witness["case2a.N"] = cp->n_index;

  const Subgroup zr = center_of(cp->r);
  set_check(rep, "case2a.Z(R)=Z(G)", zr, z);
  set_check(rep, "case2a.Z(S)=Z(G)", center_of(cp->s), z);
  set_check(rep, "case2a.R∩S=Z(G)", intersection(cp->r, cp->s), z);
  rep.check("case2a.|R:Z(R)|", cp->r.order() / zr.order(), static_cast<std::int64_t>(p) * p);
  std::int64_t non_elementary = 0;
  for (Elem x : cp->r.elements()) non_elementary += !zr.contains(g.pow(x, p));
  rep.check("case2a.R/Z(R)_elementary", non_elementary, 0);
  set_check(rep, "case2a.S=C_G(R)", cp->s, centralizer(g, cp->r));
  rep.check("case2a.[R,S]=1", commutator_subgroup(cp->r, cp->s).order(), 1);
  rep.check("case2a.RS=G", join(cp->r, cp->s).order(), g.order());

  const TauMRecord tm = tau_m(g, cp->m, cp->n);
  rep.witness["case2a.branch"] = tm.branch;
  for (const auto& c : tm.data.checks) rep.check("case2a.tau." + c.id, c.lhs, c.rhs);
  rep.check("case2a.|Z(M):Z(G)|", tm.zm_over_zg, p);
  rep.check("case2a.|G:N|", tm.g_over_n, p);
  rep.check("case2a.|im_tau|<=p", tm.im_tau_order, p, Relation::le);
  const AutGroup aut_mm = restricted_aut(g, cp->m, cp->m);
  rep.check("case2a.out_mm", aut_mm.out_image_order(), tm.predicted_out_mm);

  if (tm.im_tau_order == 1) {
    // Out_M^M(G) already has order |Z(G)|.
    rep.check("case2a.out_p_ge_Z", p_part(out_order_cached(g, rep), p), z.order(), Relation::ge);
    return;
  }
  if (z.order() == p) {
    rep.witness["case2a.routing"] = "Gaschutz";
    rep.skip("case2a.witness", "|Z(G)| = p: routed to Gaschütz, oracle divisibility only");
    return;
  }
  case2a_witness(g, rep, *cp, aut_mm);
}

TheoremReport verify_elem_abelian_centre_chain(const Group& g) {
  TheoremReport rep;
  rep.name = g.name();
  verify_elem_abelian_centre_chain(g, rep);
  return rep;
}

void verify_webb_suite(const Group& g, TheoremReport& rep) {
  if (g.is_abelian()) return rep.skip("webb", "G abelian");
  const Subgroup z = center(g);
  const auto& maxes = maximal_subgroups(g);
  ordered_json per_m = ordered_json::array();
  for (size_t k = 0; k < maxes.size(); ++k) {
    if (!z.is_subset_of(maxes[k])) continue;
    const WebbVerdict v = webb_criterion(g, maxes[k]);
    const std::string pre = "webb.M" + std::to_string(k) + ".";
    for (const auto& c : v.data.checks) rep.check(pre + c.id, c.lhs, c.rhs);
    rep.check(pre + "rep_invariant", as_int(v.representative_invariant), 1);
    if (v.non_inner_exists)
      rep.check(pre + "out_mm", v.oracle_out, v.predicted_out);
    else
      rep.check(pre + "out_mm_trivial", v.oracle_out, 1);
    per_m.push_back({{"index", k},
                     {"g", v.data.g},
                     {"second_g", v.second_rep},
                     {"im_tau", v.data.im_tau.order()},
                     {"ker_gamma", v.data.ker_gamma.order()},
                     {"non_inner", v.non_inner_exists}});
  }
  rep.witness["webb"] = per_m;
  const AutGroup az = search_automorphisms(g, AutConstraints{nullptr, &z}, false);
  rep.witness["out_Z"] = az.out_image_order();
  rep.check("webb.p_divides_out_Z", g.prime(), az.out_image_order(), Relation::divides);
}

void verify_automorphism_suite(const Group& g, TheoremReport& rep) {
  const Classification& cls = flags_of(g, rep);
  const Subgroup z = center(g);
  const std::int64_t aut = aut_order(g, rep);
  const AutGroup full = search_automorphisms(g, {}, false);
  rep.check("aut.inn_order", full.inner_count(), g.order() / z.order());
  rep.check("aut.inn_divides_aut", full.inner_count(), aut, Relation::divides);
  std::int64_t leaves = 1;
  for (int i = 0; i < g.rank() && leaves <= kDualOracleLeaves; ++i) leaves *= g.order();
  if (leaves <= kDualOracleLeaves)
    rep.check("aut.dual_oracle", count_relation_compatible_tuples(g), aut);
  else
    rep.skip("aut.dual_oracle", "|G|^n above the tuple-count budget");
  const AutGroup autz = search_automorphisms(g, AutConstraints{&z, nullptr}, false);
  rep.check("aut.autz_cap_inn", autz.inner_count(), second_center(g).order() / z.order());
  const bool chain = cls.in_hypothesis() && cls.abelian_maximal;
  if (!chain && cls.in_hypothesis()) reduction_checks(g, rep, "aut");
}

TheoremReport verify_presentation(const PcPresentation& pres) {
  TheoremReport rep;
  rep.name = pres.name;
  rep.prime = pres.prime;
  rep.rank = pres.rank;
  rep.order = ipow(pres.prime, pres.rank);
  try {
    const GroupPtr gp = enumerate(pres);
    const Group& g = *gp;
    const ConsistencyReport cr = consistency_check(g);
    rep.witness["consistency"] = {{"exhaustive", cr.exhaustive}, {"triples", cr.triples_checked}};
    rep.consistent = cr.consistent;
    if (!rep.check("engine.consistent", as_int(cr.consistent), 1)) {
      for (const auto& f : cr.failures) rep.errors.push_back(f);
      return rep;
    }
    rep.check("engine.order", g.order(), rep.order);

    const Classification& cls = flags_of(g, rep);
    if (g.order() > 1) {
      set_check(rep, "structure.frattini_two_ways", frattini_by_maximals(g), frattini_by_powers(g));
      const std::int64_t pd = ipow(g.prime(), cls.generator_rank);
      rep.check("structure.maximal_count", static_cast<std::int64_t>(maximal_subgroups(g).size()),
                (pd - 1) / (g.prime() - 1));
      subset_check(rep, "structure.derived_in_frattini", derived_subgroup(g), frattini(g));
      subset_check(rep, "structure.centre_in_z2", center(g), second_center(g));
      const QuotientMap ab = quotient(g, derived_subgroup(g));
      rep.check("structure.abelianization_histogram",
                as_int(abelian_invariants(*ab.quotient).order_histogram() == ab.quotient->order_histogram()), 1);
    }

    verify_automorphism_suite(g, rep);
    verify_webb_suite(g, rep);
    verify_abelian_maximal_chain(g, rep);
    verify_elem_abelian_centre_chain(g, rep);

    const std::int64_t aut = aut_order(g, rep);
    if (cls.in_hypothesis())
      rep.check("divisibility", g.order(), aut, Relation::divides);
    else
      rep.skip("divisibility", cls.cyclic ? "cyclic group: outside hypothesis" : "order below p^3");
  } catch (const std::exception& e) {
    rep.errors.push_back(e.what());
  }
  return rep;
}

int ReportSet::failed_groups() const {
  return static_cast<int>(std::count_if(reports.begin(), reports.end(), [](const TheoremReport& r) { return !r.ok(); }));
}

ReportSet run_corpus(const std::vector<PcPresentation>& corpus, int jobs) {
  ReportSet set;
  set.reports.resize(corpus.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < corpus.size(); i = next++) set.reports[i] = verify_presentation(corpus[i]);
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(corpus.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  auto& b = set.buckets;
  for (const char* k : {"groups", "consistent", "cyclic", "in_hypothesis", "abelian_maximal",
                        "elementary_abelian_centre", "prior_literature", "case1", "case2a", "case2b",
                        "divisibility_checked", "divisibility_pass", "failed"})
    b[k] = 0;
  for (const auto& r : set.reports) {
    ++b["groups"];
    if (!r.ok()) ++b["failed"];
    if (!r.consistent) continue;
    ++b["consistent"];
    if (!r.flags) continue;
    const auto& f = *r.flags;
    b["cyclic"] += f.cyclic;
    b["in_hypothesis"] += f.in_hypothesis();
    b["abelian_maximal"] += f.abelian_maximal;
    b["elementary_abelian_centre"] += f.elementary_abelian_centre;
    b["prior_literature"] += f.prior_literature;
    b["case1"] += f.case1.value_or(false);
    b["case2a"] += f.case2a.value_or(false);
    b["case2b"] += f.case2b.value_or(false);
    if (const Check* c = r.find("divisibility")) {
      ++b["divisibility_checked"];
      b["divisibility_pass"] += c->pass;
    }
  }
  return set;
}

ordered_json to_json(const Classification& c) {
  auto opt = [](const std::optional<bool>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  return ordered_json{{"cyclic", c.cyclic},
                      {"order_at_least_p3", c.order_at_least_p3},
                      {"abelian", c.abelian},
                      {"abelian_maximal", c.abelian_maximal},
                      {"elementary_abelian_centre", c.elementary_abelian_centre},
                      {"centre_below_frattini", c.centre_below_frattini},
                      {"prior_literature", c.prior_literature},
                      {"case1", opt(c.case1)},
                      {"case2", opt(c.case2)},
                      {"case2a", opt(c.case2a)},
                      {"case2b", opt(c.case2b)},
                      {"powerful", c.powerful},
                      {"p_central", c.p_central},
                      {"class2", c.class2},
                      {"d", c.generator_rank},
                      {"class", c.nilpotency_class}};
}

ordered_json to_json(const TheoremReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["p"] = r.prime;
  j["n"] = r.rank;
  j["order"] = r.order;
  j["consistent"] = r.consistent;
  j["flags"] = r.flags ? to_json(*r.flags) : ordered_json(nullptr);
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"rel", relation_name(c.rel)}, {"pass", c.pass}});
  j["checks"] = checks;
  if (r.divisibility) {
    j["aut_order"] = r.divisibility->aut_order;
    j["aut_p_part"] = r.divisibility->p_part;
    j["divides"] = r.divisibility->divides;
  } else {
    j["aut_order"] = nullptr;
    j["aut_p_part"] = nullptr;
    j["divides"] = nullptr;
  }
  ordered_json skips = ordered_json::array();
  for (const auto& s : r.skips) skips.push_back({{"id", s.id}, {"reason", s.reason}});
  j["skips"] = skips;
  j["witness"] = r.witness;
  j["errors"] = r.errors;
  return j;
}

ordered_json to_json(const ReportSet& s) {
  ordered_json j;
  ordered_json groups = ordered_json::array();
  for (const auto& r : s.reports) groups.push_back(to_json(r));
  j["groups"] = groups;
  ordered_json buckets = ordered_json::object();
  for (const auto& [k, v] : s.buckets) buckets[k] = v;
  j["summary"] = buckets;
  return j;
}

std::string to_csv(const ReportSet& s) {
  std::ostringstream out;
  out << "name,p,n,order,consistent,cyclic,abelian_maximal,elementary_abelian_centre,case,checks,failed,skips,"
         "aut_order,divides\n";
  for (const auto& r : s.reports) {
    std::string kase = "-";
    if (r.flags) {
      const auto& f = *r.flags;
      if (f.case1.value_or(false)) kase = "1";
      else if (f.case2a.value_or(false)) kase = "2A";
      else if (f.case2b.value_or(false)) kase = "2B";
      else if (f.prior_literature) kase = "prior";
    }
    out << r.name << ',' << r.prime << ',' << r.rank << ',' << r.order << ',' << r.consistent << ',';
    if (r.flags)
      out << r.flags->cyclic << ',' << r.flags->abelian_maximal << ',' << r.flags->elementary_abelian_centre;
    else
      out << ",,";
    out << ',' << kase << ',' << r.checks.size() << ',' << r.failed_checks() + static_cast<int>(r.errors.size())
        << ',' << r.skips.size() << ',';
    if (r.divisibility)
      out << r.divisibility->aut_order << ',' << r.divisibility->divides;
    else
      out << ',';
    out << '\n';
  }
  return out.str();
}

std::vector<PcPresentation> builtin_corpus() {
  std::vector<PcPresentation> all;
  for (const auto& [file, text] : builtin_sources()) {
    try {
      auto part = parse_presentations(text);
      all.insert(all.end(), part.begin(), part.end());
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.column(), file + ": " + e.message());
    }
  }
  return all;
}

}  // namespace pgroup
