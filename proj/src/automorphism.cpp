#include "pgroup/automorphism.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace pgroup {

Automorphism identity_automorphism(const Group& g) {
  Automorphism a{&g, std::vector<Elem>(g.order())};
  for (int x = 0; x < g.order(); ++x) a.images[x] = static_cast<Elem>(x);
  return a;
}

Automorphism conjugation(const Group& g, Elem by) {
  Automorphism a{&g, std::vector<Elem>(g.order())};
  for (int x = 0; x < g.order(); ++x) a.images[x] = g.conj(static_cast<Elem>(x), by);
  return a;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism c{a.group, std::vector<Elem>(a.images.size())};
  for (size_t x = 0; x < c.images.size(); ++x) c.images[x] = a.images[b.images[x]];
  return c;
}

Automorphism inverse(const Automorphism& a) {
  Automorphism c{a.group, std::vector<Elem>(a.images.size())};
  for (size_t x = 0; x < c.images.size(); ++x) c.images[a.images[x]] = static_cast<Elem>(x);
  return c;
}

bool is_identity(const Automorphism& a) {
  for (size_t x = 0; x < a.images.size(); ++x)
    if (a.images[x] != x) return false;
  return true;
}

int automorphism_order(const Automorphism& a) {
  Automorphism cur = a;
  int k = 1;
  while (!is_identity(cur)) {
    cur = compose(a, cur);
    ++k;
  }
  return k;
}

bool is_automorphism(const Group& g, std::span<const Elem> images) {
  if (static_cast<int>(images.size()) != g.order()) return false;
  std::vector<char> hit(g.order(), 0);
  for (Elem y : images) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (images[g.mul(static_cast<Elem>(x), static_cast<Elem>(y))] !=
          g.mul(images[x], images[y]))
        return false;
  return true;
}

std::vector<Elem> minimal_generators(const Group& g) {
  const Subgroup phi = frattini(g);
  std::vector<Elem> gens;
  Subgroup span = phi;
  for (Elem x : g.generators()) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = join(span, subgroup_generated(g, std::span<const Elem>(&x, 1)));
  }
  return gens;
}

namespace {

struct TreeStep {
  Elem elem;
  Elem parent;
  int gen;
};

// Backtracking over images of a minimal generating set x_0..x_{d-1}. A
// partial assignment is accepted when it extends to a homomorphism on
// H_k = <x_0..x_{k-1}>, checked edge by edge on the Cayley graph of H_k.
class Searcher {
 public:
  Searcher(const Group& g, const AutConstraints& c)
      : g_(g), c_(c), gens_(minimal_generators(g)), d_(static_cast<int>(gens_.size())) {
    const QuotientMap fq = quotient(g, frattini(g));
    frattini_q_ = fq.quotient;
    phi_proj_ = fq.projection;

    // Spanning trees of H_k for every k.
    trees_.resize(d_ + 1);
    members_.resize(d_ + 1);
    for (int k = 0; k <= d_; ++k) {
      std::vector<char> seen(g.order(), 0);
      seen[kIdentity] = 1;
      std::vector<Elem> list{kIdentity};
      for (size_t idx = 0; idx < list.size(); ++idx)
        for (int i = 0; i < k; ++i) {
          const Elem y = g.mul(list[idx], gens_[i]);
          if (!seen[y]) {
            seen[y] = 1;
            list.push_back(y);
            trees_[k].push_back({y, list[idx], i});
          }
        }
      members_[k] = std::move(list);
    }
    if (static_cast<int>(members_[d_].size()) != g.order())
      throw std::logic_error(g.name() + ": minimal generators do not generate the group");

    candidates_.resize(d_);
    for (int k = 0; k < d_; ++k) {
      const Elem x = gens_[k];
      for (int y = 0; y < g.order(); ++y) {
        const Elem e = static_cast<Elem>(y);
        if (g.element_order(e) != g.element_order(x)) continue;
        if (c_.top && !c_.top->contains(g.mul(g.inv(x), e))) continue;
        candidates_[k].push_back(e);
      }
    }
    if (c_.fixed) {
      fixed_at_.resize(d_ + 1);
      std::vector<char> done(g.order(), 0);
      for (int k = 1; k <= d_; ++k)
        for (Elem h : members_[k])
          if (c_.fixed->contains(h) && !done[h]) {
            done[h] = 1;
            fixed_at_[k].push_back(h);
          }
    }
    images_.assign(d_, 0);
    map_.assign(g.order(), 0);
  }

  const std::vector<Elem>& gens() const { return gens_; }
  int depth() const { return d_; }

  // Enumerate every member; visit(images, table) returns false to stop.
  template <typename Visit>
  bool enumerate(int k, std::vector<Elem>& span, Visit&& visit) {
    if (k == d_) return visit(images_, map_);
    for (Elem y : candidates_[k]) {
      if (++nodes_ > kSearchNodeCap)
        throw CapExceeded(g_.name() + ": automorphism search exceeded node cap");
      if (!independent(span, y)) continue;
      images_[k] = y;
      if (!consistent(k + 1)) continue;
      std::vector<Elem> next = extend_span(span, y);
      if (!enumerate(k + 1, next, visit)) return false;
    }
    return true;
  }

  bool exists_completion(int k, std::vector<Elem>& span) {
    bool found = false;
    enumerate(k, span, [&](const std::vector<Elem>&, const std::vector<Elem>&) {
      found = true;
      return false;
    });
    return found;
  }

  // |X| as the product of orbit lengths along x_0, x_1, ...
  std::int64_t count() {
    std::int64_t total = 1;
    std::vector<Elem> span{kIdentity};
    for (int k = 0; k < d_; ++k) {
      for (int i = 0; i < k; ++i) images_[i] = gens_[i];
      std::int64_t orbit = 0;
      for (Elem y : candidates_[k]) {
        if (++nodes_ > kSearchNodeCap)
          throw CapExceeded(g_.name() + ": automorphism search exceeded node cap");
        if (!independent(span, y)) continue;
        images_[k] = y;
        if (!consistent(k + 1)) continue;
        std::vector<Elem> next = extend_span(span, y);
        if (exists_completion(k + 1, next)) ++orbit;
        // exists_completion overwrote deeper images; restore the prefix.
        for (int i = 0; i < k; ++i) images_[i] = gens_[i];
      }
      if (orbit == 0) throw std::logic_error("automorphism orbit count is zero");
      if (total > std::numeric_limits<std::int64_t>::max() / orbit)
        throw std::overflow_error("automorphism group order overflows");
      total *= orbit;
      images_[k] = gens_[k];
      span = extend_span(span, gens_[k]);
    }
    return total;
  }

 private:
  bool independent(const std::vector<Elem>& span, Elem y) const {
    const Elem q = phi_proj_[y];
    return std::find(span.begin(), span.end(), q) == span.end();
  }

  std::vector<Elem> extend_span(const std::vector<Elem>& span, Elem y) const {
    const Group& q = *frattini_q_;
    const Elem v = phi_proj_[y];
    std::vector<Elem> out;
    out.reserve(span.size() * q.prime());
    Elem step = kIdentity;
    for (int t = 0; t < q.prime(); ++t) {
      for (Elem s : span) out.push_back(q.mul(s, step));
      step = q.mul(step, v);
    }
    return out;
  }

  bool consistent(int k) {
    map_[kIdentity] = kIdentity;
    for (const TreeStep& s : trees_[k]) map_[s.elem] = g_.mul(map_[s.parent], images_[s.gen]);
    for (Elem h : members_[k])
      for (int i = 0; i < k; ++i)
        if (map_[g_.mul(h, gens_[i])] != g_.mul(map_[h], images_[i])) return false;
    if (c_.fixed)
      for (Elem h : fixed_at_[k])
        if (map_[h] != h) return false;
    return true;
  }

  const Group& g_;
  AutConstraints c_;
  std::vector<Elem> gens_;
  int d_;
  GroupPtr frattini_q_;
  std::vector<Elem> phi_proj_;
  std::vector<std::vector<TreeStep>> trees_;
  std::vector<std::vector<Elem>> members_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<std::vector<Elem>> fixed_at_;
  std::vector<Elem> images_;
  std::vector<Elem> map_;
  std::int64_t nodes_ = 0;
};

Automorphism table_from_tuple(const Group& g, std::span<const Elem> gens,
                              std::span<const Elem> images) {
  Automorphism a{&g, std::vector<Elem>(g.order(), 0)};
  std::vector<char> seen(g.order(), 0);
  seen[kIdentity] = 1;
  std::vector<Elem> list{kIdentity};
  for (size_t idx = 0; idx < list.size(); ++idx)
    for (size_t i = 0; i < gens.size(); ++i) {
      const Elem y = g.mul(list[idx], gens[i]);
      if (!seen[y]) {
        seen[y] = 1;
        a.images[y] = g.mul(a.images[list[idx]], images[i]);
        list.push_back(y);
      }
    }
  return a;
}

bool meets_constraints(const Group& g, const AutConstraints& c, const Automorphism& a,
                       std::span<const Elem> gens) {
  if (c.top)
    for (Elem x : gens)
      if (!c.top->contains(g.mul(g.inv(x), a(x)))) return false;
  if (c.fixed)
    for (Elem h : c.fixed->generators())
      if (a(h) != h) return false;
  return true;
}

std::int64_t count_inner_meeting(const Group& g, const AutConstraints& c,
                                 std::span<const Elem> gens) {
  std::set<std::vector<Elem>> seen;
  for (int x = 0; x < g.order(); ++x) {
    std::vector<Elem> t;
    for (Elem s : gens) t.push_back(g.conj(s, static_cast<Elem>(x)));
    if (seen.count(t)) continue;
    const Automorphism a = table_from_tuple(g, gens, t);
    if (meets_constraints(g, c, a, gens)) seen.insert(std::move(t));
  }
  return static_cast<std::int64_t>(seen.size());
}

}  // namespace

std::span<const Elem> AutGroup::tuple(std::int64_t i) const {
  return std::span<const Elem>(tuples_).subspan(static_cast<size_t>(i) * width(), gens_.size());
}

Automorphism AutGroup::at(std::int64_t i) const { return table_from_tuple(*group_, gens_, tuple(i)); }

AutGroup search_automorphisms(const Group& g, const AutConstraints& c, bool store) {
  AutGroup out;
  out.group_ = &g;
  if (g.order() == 1) {
    out.order_ = 1;
    out.stored_ = true;
    return out;
  }
  Searcher s(g, c);
  out.gens_ = s.gens();
  out.order_ = s.count();
  if (store && out.order_ <= kStoredAutomorphismCap) {
    Searcher walk(g, c);
    std::vector<Elem> span{kIdentity};
    walk.enumerate(0, span, [&](const std::vector<Elem>& images, const std::vector<Elem>&) {
      out.tuples_.insert(out.tuples_.end(), images.begin(), images.end());
      return true;
    });
    out.stored_ = true;
    if (out.size() != out.order_)
      throw std::logic_error(g.name() + ": enumerated automorphisms disagree with orbit count");
  }
  out.inner_count_ = count_inner_meeting(g, c, out.gens_);
  return out;
}

AutGroup automorphism_group(const Group& g) { return search_automorphisms(g, {}, true); }

std::int64_t automorphism_count(const Group& g) { return search_automorphisms(g, {}, false).order(); }

void for_each_automorphism(const Group& g, const AutConstraints& c,
                           const std::function<bool(const Automorphism&)>& visit) {
  if (g.order() == 1) {
    visit(identity_automorphism(g));
    return;
  }
  Searcher s(g, c);
  std::vector<Elem> span{kIdentity};
  s.enumerate(0, span, [&](const std::vector<Elem>&, const std::vector<Elem>& table) {
    return visit(Automorphism{&g, table});
  });
}

std::int64_t count_relation_compatible_tuples(const Group& g) {
  const PcPresentation& pres = g.presentation();
  const int n = g.rank();
  if (n == 0) return 1;
  const QuotientMap fq = quotient(g, frattini(g));
  const int top = fq.quotient->order();
  std::vector<Elem> y(n, 0);
  std::int64_t count = 0;
  auto eval = [&](const Word& w) {
    Elem r = kIdentity;
    for (const Letter& l : w) r = g.mul(r, g.pow(y[l.gen], l.exp));
    return r;
  };
  auto generates = [&] {
    std::vector<Elem> gens;
    for (Elem v : y) gens.push_back(fq.projection[v]);
    return subgroup_generated(*fq.quotient, gens).order() == top;
  };
  // Assign images from the last generator down so every relation of g_i
  // only involves generators already placed.
  std::function<void(int)> place = [&](int i) {
    if (i < 0) {
      if (generates()) ++count;
      return;
    }
    for (int v = 0; v < g.order(); ++v) {
      y[i] = static_cast<Elem>(v);
      if (g.pow(y[i], g.prime()) != eval(pres.power[i])) continue;
      bool ok = true;
      for (int j = i + 1; j < n && ok; ++j)
        ok = g.conj(y[j], y[i]) == eval(pres.conj[i][j]);
      if (ok) place(i - 1);
    }
  };
  place(n - 1);
  return count;
}

std::vector<Automorphism> inner_automorphisms(const Group& g) {
  std::vector<Automorphism> out;
  std::set<std::vector<Elem>> seen;
  for (int x = 0; x < g.order(); ++x) {
    Automorphism a = conjugation(g, static_cast<Elem>(x));
    if (seen.insert(a.images).second) out.push_back(std::move(a));
  }
  return out;
}

std::int64_t inner_order(const Group& g) { return g.order() / center(g).order(); }

std::int64_t out_order(const Group& g) { return automorphism_count(g) / inner_order(g); }

std::int64_t p_part(std::int64_t m, int p) {
  if (m == 0) return 0;
  std::int64_t r = 1;
  while (m % p == 0) {
    m /= p;
    r *= p;
  }
  return r;
}

bool is_inner(const Automorphism& a) {
  const Group& g = *a.group;
  for (int x = 0; x < g.order(); ++x) {
    bool match = true;
    for (Elem s : g.generators())
      if (g.conj(s, static_cast<Elem>(x)) != a(s)) {
        match = false;
        break;
      }
    if (match) return true;
  }
  return false;
}

AutGroup restricted_aut(const Group& g, const Subgroup& m, const Subgroup& n) {
  if (!is_normal(m) || !is_normal(n))
    throw std::invalid_argument("restricted_aut expects normal subgroups");
  return search_automorphisms(g, AutConstraints{&m, &n}, true);
}

std::int64_t hom_count_abelian(const AbelianInvariants& a, const AbelianInvariants& b) {
  if (a.prime != b.prime) throw std::invalid_argument("hom count across different primes");
  std::int64_t count = 1;
  for (int x : a.exponents)
    for (int y : b.exponents)
      for (int t = 0; t < std::min(x, y); ++t) {
        if (count > std::numeric_limits<std::int64_t>::max() / a.prime)
          throw std::overflow_error("hom count overflows");
        count *= a.prime;
      }
  return count;
}

std::vector<int> HomFamily::coordinates(Elem quotient_elem) const {
  return coordinate_table[quotient_elem];
}

Elem HomFamily::evaluate(size_t member, Elem x) const {
  const Group& g = target.group();
  const auto& c = coordinate_table[abelianization.projection[x]];
  Elem r = kIdentity;
  for (size_t i = 0; i < c.size(); ++i) r = g.mul(r, g.pow(members[member][i], c[i]));
  return r;
}

namespace {

constexpr std::int64_t kHomFamilyCap = 1 << 18;

}  // namespace

HomFamily abelianization_family(const Group& g) {
  HomFamily fam;
  fam.abelianization = quotient(g, derived_subgroup(g));
  const Group& q = *fam.abelianization.quotient;
  fam.source_basis = abelian_invariants(q);
  fam.target = center(g);
  fam.coordinate_table.assign(q.order(), {});
  // Walk every coordinate vector once.
  const int r = fam.source_basis.rank();
  std::vector<int> c(r, 0);
  std::vector<std::int64_t> orders;
  for (int e : fam.source_basis.exponents) {
    std::int64_t o = 1;
    for (int t = 0; t < e; ++t) o *= g.prime();
    orders.push_back(o);
  }
  while (true) {
    Elem v = kIdentity;
    for (int i = 0; i < r; ++i) v = q.mul(v, q.pow(fam.source_basis.basis[i], c[i]));
    fam.coordinate_table[v] = c;
    int i = 0;
    while (i < r && ++c[i] == orders[i]) c[i++] = 0;
    if (i == r) break;
  }
  return fam;
}

HomFamily homs_to_center(const Group& g) {
  HomFamily fam = abelianization_family(g);
  const int r = fam.source_basis.rank();
  std::vector<std::vector<Elem>> options(r);
  std::int64_t total = 1;
  for (int i = 0; i < r; ++i) {
    std::int64_t o = 1;
    for (int t = 0; t < fam.source_basis.exponents[i]; ++t) o *= g.prime();
    for (Elem z : fam.target.elements())
      if (o % g.element_order(z) == 0) options[i].push_back(z);
    total *= static_cast<std::int64_t>(options[i].size());
    if (total > kHomFamilyCap) throw CapExceeded(g.name() + ": Hom(G/G', Z(G)) too large to list");
  }
  std::vector<size_t> pick(r, 0);
  while (true) {
    std::vector<Elem> m(r);
    for (int i = 0; i < r; ++i) m[i] = options[i][pick[i]];
    fam.members.push_back(std::move(m));
    int i = 0;
    while (i < r && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == r) break;
  }
  return fam;
}

std::optional<std::vector<Elem>> hom_from_basis_images(const HomFamily& fam,
                                                       std::vector<Elem> images) {
  const Group& g = fam.target.group();
  if (static_cast<int>(images.size()) != fam.source_basis.rank()) return std::nullopt;
  for (size_t i = 0; i < images.size(); ++i) {
    std::int64_t o = 1;
    for (int t = 0; t < fam.source_basis.exponents[i]; ++t) o *= g.prime();
    if (!fam.target.contains(images[i]) || o % g.element_order(images[i]) != 0) return std::nullopt;
  }
  return images;
}

std::optional<Automorphism> central_aut_from_hom(const Group& g, const HomFamily& fam,
                                                 std::span<const Elem> basis_images) {
  Automorphism a{&g, std::vector<Elem>(g.order())};
  const auto& proj = fam.abelianization.projection;
  for (int x = 0; x < g.order(); ++x) {
    const auto& c = fam.coordinate_table[proj[x]];
    Elem f = kIdentity;
    for (size_t i = 0; i < c.size(); ++i) f = g.mul(f, g.pow(basis_images[i], c[i]));
    a.images[x] = g.mul(static_cast<Elem>(x), f);
  }
  for (int x = 0; x < g.order(); ++x)
    for (Elem s : g.generators())
      if (a(g.mul(static_cast<Elem>(x), s)) != g.mul(a(static_cast<Elem>(x)), a(s)))
        throw std::logic_error(g.name() + ": x -> x f(x) is not an endomorphism");
  std::vector<char> hit(g.order(), 0);
  for (Elem y : a.images) {
    if (hit[y]) return std::nullopt;
    hit[y] = 1;
  }
  return a;
}

AdneyYenRecord adney_yen_check(const Group& g) {
  if (abelian_direct_factor_split(g))
    throw PreconditionError(g.name() + " has an abelian direct factor");
  const Subgroup z = center(g);
  AdneyYenRecord rec;
  rec.autz_order = search_automorphisms(g, AutConstraints{&z, nullptr}, false).order();
  const HomFamily skel = abelianization_family(g);
  rec.hom_count = hom_count_abelian(skel.source_basis, abelian_invariants(z));
  rec.equal = rec.autz_order == rec.hom_count;
  if (rec.hom_count <= kHomFamilyCap) {
    const HomFamily fam = homs_to_center(g);
    for (const auto& m : fam.members)
      if (central_aut_from_hom(g, fam, m)) ++rec.bijective_from_homs;
  } else {
    rec.bijective_from_homs = -1;
  }
  return rec;
}

}  // namespace pgroup
