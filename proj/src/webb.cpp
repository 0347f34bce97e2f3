#include "pgroup/webb.hpp"

#include <stdexcept>

namespace pgroup {

namespace {

IdentityCheck count_check(std::string id, std::int64_t bad) {
  return IdentityCheck{std::move(id), bad, 0, bad == 0};
}

Subgroup mask_subgroup(const Group& g, const std::vector<Elem>& elems) {
  std::vector<char> mask(g.order(), 0);
  for (Elem x : elems) mask[x] = 1;
  return Subgroup::from_mask(g, std::move(mask));
}

bool is_maximal(const Group& g, const Subgroup& m) {
  for (const Subgroup& s : maximal_subgroups(g))
    if (s == m) return true;
  return false;
}

}  // namespace

bool WebbData::all_checks_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

WebbData webb_maps(const Group& g, const Subgroup& m, std::optional<Elem> rep) {
  if (!is_maximal(g, m)) throw std::invalid_argument("webb_maps expects a maximal subgroup");
  WebbData d;
  d.group = &g;
  d.m = m;
  if (rep) {
    if (m.contains(*rep)) throw std::invalid_argument("coset representative lies in M");
    d.g = *rep;
  } else {
    int x = 0;
    while (m.contains(static_cast<Elem>(x))) ++x;
    d.g = static_cast<Elem>(x);
  }
  d.zm = center_of(m);
  const Elem gp_inv = g.inv(g.pow(d.g, g.prime()));
  const auto& zs = d.zm.elements();
  std::vector<int> slot(g.order(), -1);
  for (size_t i = 0; i < zs.size(); ++i) slot[zs[i]] = static_cast<int>(i);
  std::vector<Elem> ker_tau, ker_gamma;
  for (Elem z : zs) {
    const Elem t = g.mul(gp_inv, g.pow(g.mul(d.g, z), g.prime()));
    const Elem c = g.comm(z, d.g);
    d.tau.push_back(t);
    d.gamma.push_back(c);
    if (t == kIdentity) ker_tau.push_back(z);
    if (c == kIdentity) ker_gamma.push_back(z);
  }

  // Multiplicativity on Z(M), images inside Z(M).
  std::int64_t bad_tau = 0, bad_gamma = 0, outside = 0;
  for (size_t i = 0; i < zs.size(); ++i) {
    if (!d.zm.contains(d.tau[i]) || !d.zm.contains(d.gamma[i])) ++outside;
    for (size_t j = 0; j < zs.size(); ++j) {
      const int k = slot[g.mul(zs[i], zs[j])];
      if (d.tau[k] != g.mul(d.tau[i], d.tau[j])) ++bad_tau;
      if (d.gamma[k] != g.mul(d.gamma[i], d.gamma[j])) ++bad_gamma;
    }
  }
  d.checks.push_back(count_check("tau_multiplicative", bad_tau));
  d.checks.push_back(count_check("gamma_multiplicative", bad_gamma));
  d.checks.push_back(count_check("images_in_Z(M)", outside));

  d.im_tau = mask_subgroup(g, d.tau);
  d.im_gamma = mask_subgroup(g, d.gamma);
  d.ker_tau = mask_subgroup(g, ker_tau);
  d.ker_gamma = mask_subgroup(g, ker_gamma);

  std::int64_t gamma_out = 0, tau_out = 0, tau_gamma = 0;
  for (size_t i = 0; i < zs.size(); ++i) {
    if (!d.ker_tau.contains(d.gamma[i])) ++gamma_out;
    if (!d.ker_gamma.contains(d.tau[i])) ++tau_out;
    if (slot[d.gamma[i]] < 0 || d.tau[slot[d.gamma[i]]] != kIdentity) ++tau_gamma;
  }
  d.checks.push_back(count_check("im_gamma<=ker_tau", gamma_out));
  d.checks.push_back(count_check("im_tau<=ker_gamma", tau_out));
  d.checks.push_back(count_check("tau(gamma(m))=1", tau_gamma));
  const Subgroup zg_m = intersection(center(g), m);
  d.checks.push_back(IdentityCheck{"ker_gamma=Z(G)∩M", d.ker_gamma.order(), zg_m.order(),
                                   d.ker_gamma == zg_m});
  return d;
}

WebbVerdict webb_criterion(const Group& g, const Subgroup& m) {
  if (g.is_abelian()) throw PreconditionError(g.name() + " is abelian");
  if (!center(g).is_subset_of(m)) throw PreconditionError("maximal subgroup does not contain Z(G)");
  WebbVerdict v;
  v.data = webb_maps(g, m);
  v.non_inner_exists = !(v.data.im_tau == v.data.ker_gamma);
  if (v.non_inner_exists) v.predicted_out = v.data.ker_gamma.order() / v.data.im_tau.order();

  int x = g.order() - 1;
  while (m.contains(static_cast<Elem>(x))) --x;
  v.second_rep = static_cast<Elem>(x);
  const WebbData other = webb_maps(g, m, v.second_rep);
  v.representative_invariant = other.im_tau == v.data.im_tau && other.ker_gamma == v.data.ker_gamma &&
                               other.all_checks_pass();

  const AutGroup a = restricted_aut(g, m, m);
  v.oracle_aut = a.order();
  v.oracle_out = a.out_image_order();
  return v;
}

TauMRecord tau_m(const Group& g, const Subgroup& m, const Subgroup& n) {
  if (g.is_abelian()) throw PreconditionError(g.name() + " is abelian; no qualifying pair");
  const Subgroup z = center(g);
  const Subgroup zm = center_of(m);
  if (!is_maximal(g, m) || !is_maximal(g, n) || !join(zm, n).is_whole() ||
      !(intersection(zm, n) == z))
    throw PreconditionError("(M, N) is not a qualifying pair");
  TauMRecord r;
  r.data = webb_maps(g, m);
  r.zm_over_zg = zm.order() / z.order();
  r.g_over_n = g.order() / n.order();
  r.im_tau_order = r.data.im_tau.order();
  if (r.im_tau_order > g.prime())
    throw std::logic_error(g.name() + ": |im tau_M| exceeds p");
  if (r.im_tau_order == 1) {
    r.branch = "im_tau=1";
    r.predicted_out_mm = z.order();
  } else {
    r.branch = "im_tau=C_p";
    r.predicted_out_mm = z.order() / g.prime();
  }
  return r;
}

}  // namespace pgroup
