#include "pgroup/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pgroup {

namespace {

std::vector<char> closure_mask(const Group& g, std::span<const Elem> gens, std::vector<Elem>* out) {
  std::vector<char> mask(g.order(), 0);
  std::vector<Elem> elems{kIdentity};
  mask[kIdentity] = 1;
  for (size_t idx = 0; idx < elems.size(); ++idx)
    for (Elem s : gens) {
      const Elem y = g.mul(elems[idx], s);
      if (!mask[y]) {
        mask[y] = 1;
        elems.push_back(y);
      }
    }
  if (out) *out = std::move(elems);
  return mask;
}

std::vector<Elem> mask_elements(const std::vector<char>& mask) {
  std::vector<Elem> e;
  for (size_t x = 0; x < mask.size(); ++x)
    if (mask[x]) e.push_back(static_cast<Elem>(x));
  return e;
}

}  // namespace

Subgroup Subgroup::from_mask(const Group& g, std::vector<char> mask, std::vector<Elem> gens) {
  Subgroup s;
  s.group_ = &g;
  s.mask_ = std::move(mask);
  s.elements_ = mask_elements(s.mask_);
  gens.erase(std::remove(gens.begin(), gens.end(), kIdentity), gens.end());
  s.gens_ = std::move(gens);
  return s;
}

Subgroup Subgroup::from_mask(const Group& g, std::vector<char> mask) {
  std::vector<Elem> gens;
  std::vector<char> reached(g.order(), 0);
  reached[kIdentity] = 1;
  int reached_count = 1;
  int target = 0;
  for (char c : mask) target += c != 0;
  for (int x = 0; x < g.order() && reached_count < target; ++x) {
    if (!mask[x] || reached[x]) continue;
    gens.push_back(static_cast<Elem>(x));
    reached = closure_mask(g, gens, nullptr);
    reached_count = 0;
    for (char c : reached) reached_count += c != 0;
  }
  return from_mask(g, std::move(mask), std::move(gens));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  for (Elem x : elements_)
    if (!other.contains(x)) return false;
  return true;
}

Subgroup whole_group(const Group& g) {
  return Subgroup::from_mask(g, std::vector<char>(g.order(), 1), g.generators());
}

Subgroup trivial_subgroup(const Group& g) {
  std::vector<char> mask(g.order(), 0);
  mask[kIdentity] = 1;
  return Subgroup::from_mask(g, std::move(mask), {});
}

Subgroup subgroup_generated(const Group& g, std::span<const Elem> gens) {
  std::vector<Elem> list(gens.begin(), gens.end());
  auto mask = closure_mask(g, list, nullptr);
  return Subgroup::from_mask(g, std::move(mask), std::move(list));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return subgroup_generated(a.group(), gens);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<char> mask(a.group().order(), 0);
  for (Elem x : a.elements())
    if (b.contains(x)) mask[x] = 1;
  return Subgroup::from_mask(a.group(), std::move(mask));
}

Subgroup normal_closure(const Group& g, std::span<const Elem> elems) {
  std::vector<Elem> gens(elems.begin(), elems.end());
  Subgroup s = subgroup_generated(g, gens);
  while (true) {
    bool grew = false;
    for (Elem h : std::vector<Elem>(s.generators()))
      for (Elem x : g.generators()) {
        const Elem c = g.conj(h, x);
        if (!s.contains(c)) {
          gens.push_back(c);
          s = subgroup_generated(g, gens);
          grew = true;
        }
      }
    if (!grew) return s;
  }
}

bool is_normal(const Subgroup& s) {
  const Group& g = s.group();
  for (Elem h : s.elements())
    for (Elem x : g.generators())
      if (!s.contains(g.conj(h, x))) return false;
  return true;
}

bool is_abelian(const Subgroup& s) {
  const Group& g = s.group();
  for (Elem a : s.generators())
    for (Elem b : s.generators())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

int exponent(const Subgroup& s) {
  int e = 1;
  for (Elem x : s.elements()) e = std::max(e, s.group().element_order(x));
  return e;
}

Subgroup centralizer(const Group& g, const Subgroup& s) {
  std::vector<char> mask(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (Elem h : s.generators())
      if (g.mul(static_cast<Elem>(x), h) != g.mul(h, static_cast<Elem>(x))) {
        commutes = false;
        break;
      }
    mask[x] = commutes;
  }
  return Subgroup::from_mask(g, std::move(mask));
}

Subgroup center(const Group& g) {
  StructureCache& c = g.cache();
  std::call_once(c.center_once, [&] { c.center = centralizer(g, whole_group(g)); });
  return *c.center;
}

Subgroup center_of(const Subgroup& s) { return intersection(s, centralizer(s.group(), s)); }

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const Group& g = a.group();
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> comms;
  for (Elem x : a.elements())
    for (Elem y : b.elements()) {
      const Elem c = g.comm(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  Subgroup closure = subgroup_generated(g, comms);
  return Subgroup::from_mask(g, closure.mask());
}

Subgroup derived_subgroup(const Group& g) {
  StructureCache& c = g.cache();
  std::call_once(c.derived_once, [&] {
    const Subgroup all = whole_group(g);
    c.derived = commutator_subgroup(all, all);
  });
  return *c.derived;
}

Subgroup power_subgroup(const Group& g, int k) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> powers;
  for (int x = 0; x < g.order(); ++x) {
    const Elem y = g.pow(static_cast<Elem>(x), k);
    if (!seen[y]) {
      seen[y] = 1;
      powers.push_back(y);
    }
  }
  return Subgroup::from_mask(g, subgroup_generated(g, powers).mask());
}

Subgroup omega(const Group& g, int k) {
  std::int64_t q = 1;
  for (int i = 0; i < k; ++i) q *= g.prime();
  std::vector<Elem> gens;
  for (int x = 0; x < g.order(); ++x)
    if (q % g.element_order(static_cast<Elem>(x)) == 0) gens.push_back(static_cast<Elem>(x));
  return Subgroup::from_mask(g, subgroup_generated(g, gens).mask());
}

Subgroup omega1(const Subgroup& a) {
  if (!is_abelian(a)) throw std::invalid_argument("omega1 expects an abelian subgroup");
  const Group& g = a.group();
  std::vector<char> mask(g.order(), 0);
  for (Elem x : a.elements())
    if (g.element_order(x) <= g.prime()) mask[x] = 1;
  return Subgroup::from_mask(g, std::move(mask));
}

int log_p(std::int64_t n, int p) {
  int k = 0;
  while (n > 1) {
    if (n % p != 0) throw std::logic_error("not a power of p");
    n /= p;
    ++k;
  }
  return k;
}

const std::vector<Subgroup>& maximal_subgroups(const Group& g) {
  StructureCache& c = g.cache();
  std::call_once(c.maximal_once, [&] {
    // A homomorphism to C_p is a coefficient vector a over the pc-generators
    // satisfying every defining relation read additively.
    const PcPresentation& pres = g.presentation();
    const int p = g.prime();
    const int n = g.rank();
    auto weight = [&](const Word& w, const Exponents& a) {
      int s = 0;
      for (const Letter& l : w) s += l.exp * a[l.gen];
      return s % p;
    };
    for (int code = 1; code < g.order(); ++code) {
      const Exponents a = decode(code, p, n);
      int lead = 0;
      while (a[lead] == 0) ++lead;
      if (a[lead] != 1) continue;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        if (weight(pres.power[i], a) != 0) ok = false;
        for (int j = i + 1; j < n && ok; ++j)
          if (weight(pres.conj[i][j], a) != a[j]) ok = false;
      }
      if (!ok) continue;
      std::vector<char> mask(g.order(), 0);
      for (int x = 0; x < g.order(); ++x) {
        const Exponents e = decode(x, p, n);
        int s = 0;
        for (int i = 0; i < n; ++i) s += e[i] * a[i];
        mask[x] = (s % p) == 0;
      }
      c.maximal.push_back(Subgroup::from_mask(g, std::move(mask)));
    }
  });
  return c.maximal;
}

Subgroup frattini_by_maximals(const Group& g) {
  const auto& maxes = maximal_subgroups(g);
  Subgroup phi = whole_group(g);
  for (const Subgroup& m : maxes) phi = intersection(phi, m);
  return phi;
}

Subgroup frattini_by_powers(const Group& g) {
  return Subgroup::from_mask(g, join(derived_subgroup(g), power_subgroup(g, g.prime())).mask());
}

Subgroup frattini(const Group& g) {
  StructureCache& c = g.cache();
  std::call_once(c.frattini_once, [&] {
    Subgroup a = frattini_by_maximals(g);
    Subgroup b = frattini_by_powers(g);
    if (!(a == b))
      throw std::logic_error(g.name() + ": Frattini subgroup routes disagree (" +
                             std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
    c.frattini = std::move(a);
  });
  return *c.frattini;
}

int generator_rank(const Group& g) { return log_p(g.order() / frattini(g).order(), g.prime()); }

std::vector<Subgroup> lower_central_series(const Group& g) {
  std::vector<Subgroup> series{whole_group(g)};
  const Subgroup all = whole_group(g);
  while (!series.back().is_trivial()) {
    Subgroup next = commutator_subgroup(series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

int nilpotency_class(const Group& g) {
  return static_cast<int>(lower_central_series(g).size()) - 1;
}

namespace {

// A descending chain of subgroups (or unions of cosets of a normal subgroup),
// each of index 1 or p in the previous, with one representative per proper step.
struct InducedSeries {
  std::vector<Elem> gens;
  std::vector<std::vector<char>> below;
};

Exponents sift(const Group& g, const InducedSeries& s, Elem x) {
  const int m = static_cast<int>(s.gens.size());
  Exponents e(m, 0);
  for (int a = 0; a < m; ++a) {
    const Elem back = g.inv(s.gens[a]);
    int k = 0;
    while (!s.below[a][x]) {
      x = g.mul(back, x);
      if (++k >= g.prime()) throw std::logic_error("sifting failed: series is not a pc-series");
    }
    e[a] = k;
  }
  return e;
}

PcPresentation induced_presentation(const Group& g, const InducedSeries& s, std::string name) {
  const int m = static_cast<int>(s.gens.size());
  PcPresentation pres = PcPresentation::trivial_relations(std::move(name), g.prime(), m);
  auto to_word = [&](const Exponents& e, int first) {
    Word w;
    for (int b = 0; b < m; ++b) {
      if (e[b] == 0) continue;
      if (b < first) throw std::logic_error("induced relation leaves the series");
      w.push_back({b, e[b]});
    }
    return w;
  };
  for (int a = 0; a < m; ++a) {
    pres.power[a] = to_word(sift(g, s, g.pow(s.gens[a], g.prime())), a + 1);
    for (int b = a + 1; b < m; ++b)
      pres.conj[a][b] = to_word(sift(g, s, g.conj(s.gens[b], s.gens[a])), b);
  }
  return pres;
}

int mask_count(const std::vector<char>& m) {
  int c = 0;
  for (char x : m) c += x != 0;
  return c;
}

}  // namespace

Subgroup QuotientMap::image(const Subgroup& s) const {
  std::vector<char> mask(quotient->order(), 0);
  for (Elem x : s.elements()) mask[projection[x]] = 1;
  return Subgroup::from_mask(*quotient, std::move(mask));
}

Subgroup QuotientMap::preimage(const Subgroup& s) const {
  std::vector<char> mask(source->order(), 0);
  for (int x = 0; x < source->order(); ++x) mask[x] = s.contains(projection[x]);
  return Subgroup::from_mask(*source, std::move(mask));
}

QuotientMap quotient(const Group& g, const Subgroup& n) {
  if (!is_normal(n)) throw std::invalid_argument("quotient by a non-normal subgroup of " + g.name());
  std::vector<int> coset(g.order(), -1);
  std::vector<std::vector<Elem>> cosets;
  for (int x = 0; x < g.order(); ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(cosets.size());
    cosets.emplace_back();
    for (Elem h : n.elements()) {
      const Elem y = g.mul(static_cast<Elem>(x), h);
      coset[y] = id;
      cosets.back().push_back(y);
    }
  }
  // L_i = <g_i..g_n> N as a union of cosets.
  const int rank = g.rank();
  std::vector<std::vector<char>> chain(rank + 1, std::vector<char>(g.order(), 0));
  for (int i = 0; i <= rank; ++i) {
    const int bound = i == rank ? 1 : g.tail_bound(i);
    std::vector<char> hit(cosets.size(), 0);
    for (int y = 0; y < bound; ++y) hit[coset[y]] = 1;
    for (size_t c = 0; c < cosets.size(); ++c)
      if (hit[c])
        for (Elem y : cosets[c]) chain[i][y] = 1;
  }
  InducedSeries series;
  for (int i = 0; i < rank; ++i)
    if (mask_count(chain[i]) > mask_count(chain[i + 1])) {
      series.gens.push_back(g.generator(i));
      series.below.push_back(chain[i + 1]);
    }
  QuotientMap q;
  q.source = &g;
  q.kernel = n;
  q.quotient = enumerate(induced_presentation(g, series, g.name() + "/N"));
  q.projection.resize(g.order());
  q.lift.assign(q.quotient->order(), 0);
  std::vector<char> lifted(q.quotient->order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    const Elem img = q.quotient->element(sift(g, series, static_cast<Elem>(x)));
    q.projection[x] = img;
    if (!lifted[img]) {
      lifted[img] = 1;
      q.lift[img] = static_cast<Elem>(x);
    }
  }
  return q;
}

SubgroupEmbedding subgroup_as_group(const Subgroup& s, std::string name) {
  const Group& g = s.group();
  const int rank = g.rank();
  auto term = [&](int i) {
    std::vector<char> mask(g.order(), 0);
    const int bound = i == rank ? 1 : g.tail_bound(i);
    for (Elem x : s.elements())
      if (x < bound) mask[x] = 1;
    return mask;
  };
  InducedSeries series;
  std::vector<char> upper = term(0);
  for (int i = 0; i < rank; ++i) {
    std::vector<char> lower = term(i + 1);
    if (mask_count(upper) > mask_count(lower)) {
      Elem rep = 0;
      for (int x = 0; x < g.order(); ++x)
        if (upper[x] && !lower[x]) {
          rep = static_cast<Elem>(x);
          break;
        }
      series.gens.push_back(rep);
      series.below.push_back(lower);
    }
    upper = std::move(lower);
  }
  if (name.empty()) name = g.name() + "_sub" + std::to_string(s.order());
  SubgroupEmbedding emb;
  emb.ambient = &g;
  emb.subgroup = s;
  emb.group = enumerate(induced_presentation(g, series, std::move(name)));
  emb.embed.resize(emb.group->order());
  emb.restriction.assign(g.order(), -1);
  for (int q = 0; q < emb.group->order(); ++q) {
    const Exponents e = emb.group->exponents(static_cast<Elem>(q));
    Elem x = kIdentity;
    for (size_t a = 0; a < e.size(); ++a) x = g.mul(x, g.pow(series.gens[a], e[a]));
    emb.embed[q] = x;
    emb.restriction[x] = q;
  }
  return emb;
}

Subgroup second_center(const Group& g) {
  StructureCache& c = g.cache();
  std::call_once(c.second_center_once, [&] {
    const QuotientMap q = quotient(g, center(g));
    Subgroup zq = center(*q.quotient);
    c.second_center = q.preimage(zq);
  });
  return *c.second_center;
}

std::int64_t AbelianInvariants::order() const {
  std::int64_t o = 1;
  for (int a : exponents)
    for (int k = 0; k < a; ++k) o *= prime;
  return o;
}

std::int64_t AbelianInvariants::exponent() const {
  std::int64_t e = 1;
  if (!exponents.empty())
    for (int k = 0; k < exponents.front(); ++k) e *= prime;
  return e;
}

std::map<int, int> AbelianInvariants::order_histogram() const {
  // Elements of order dividing p^k: prod_i p^{min(a_i, k)}.
  std::map<int, int> h;
  const int top = exponents.empty() ? 0 : exponents.front();
  std::int64_t prev = 1;
  std::int64_t pk = 1;
  h[1] = 1;
  for (int k = 1; k <= top; ++k) {
    pk *= prime;
    std::int64_t count = 1;
    for (int a : exponents)
      for (int t = 0; t < std::min(a, k); ++t) count *= prime;
    h[static_cast<int>(pk)] = static_cast<int>(count - prev);
    prev = count;
  }
  return h;
}

AbelianInvariants abelian_invariants(const Subgroup& a) {
  if (!is_abelian(a)) throw std::invalid_argument("abelian_invariants expects an abelian group");
  const Group& g = a.group();
  const int p = g.prime();
  AbelianInvariants inv;
  inv.prime = p;

  // Span of the basis so far, with coordinates of each member.
  std::vector<int> slot(g.order(), -1);
  std::vector<Elem> span{kIdentity};
  std::vector<std::vector<int>> coords{{}};
  slot[kIdentity] = 0;
  std::vector<int> basis_orders;

  while (static_cast<int>(span.size()) < a.order()) {
    Elem best = kIdentity;
    int best_t = -1;
    for (Elem x : a.elements()) {
      int t = 0;
      Elem y = x;
      while (slot[y] < 0) {
        y = g.pow(y, p);
        ++t;
      }
      if (t > best_t) {
        best_t = t;
        best = x;
      }
    }
    std::int64_t q = 1;
    for (int k = 0; k < best_t; ++k) q *= p;
    const Elem h = g.pow(best, q);
    const auto& c = coords[slot[h]];
    Elem corrected = best;
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] % q != 0) throw std::logic_error("greedy basis: coordinate not divisible");
      corrected = g.mul(corrected, g.pow(inv.basis[i], -(c[i] / q)));
    }
    if (g.pow(corrected, q) != kIdentity) throw std::logic_error("greedy basis: correction failed");
    inv.basis.push_back(corrected);
    inv.exponents.push_back(best_t);
    basis_orders.push_back(static_cast<int>(q));

    const size_t old = span.size();
    Elem step = corrected;
    for (int k = 1; k < q; ++k) {
      for (size_t s = 0; s < old; ++s) {
        const Elem y = g.mul(span[s], step);
        std::vector<int> cy = coords[s];
        cy.resize(inv.basis.size(), 0);
        cy.back() = k;
        slot[y] = static_cast<int>(span.size());
        span.push_back(y);
        coords.push_back(std::move(cy));
      }
      step = g.mul(step, corrected);
    }
    for (size_t s = 0; s < old; ++s) coords[s].resize(inv.basis.size(), 0);
  }
  return inv;
}

AbelianInvariants abelian_invariants(const Group& g) { return abelian_invariants(whole_group(g)); }

std::optional<DirectFactorSplit> abelian_direct_factor_split(const Group& g) {
  if (g.order() == 1) return std::nullopt;
  if (g.is_abelian()) return DirectFactorSplit{whole_group(g), trivial_subgroup(g)};

  const Subgroup z = center(g);
  const Subgroup d = derived_subgroup(g);
  // An abelian direct factor is central and meets G' trivially.
  std::set<std::vector<char>> seen;
  std::vector<Subgroup> candidates{trivial_subgroup(g)};
  seen.insert(candidates.front().mask());
  constexpr size_t kSubgroupCap = 200000;
  for (size_t idx = 0; idx < candidates.size(); ++idx) {
    const Subgroup cur = candidates[idx];
    for (Elem x : z.elements()) {
      if (cur.contains(x)) continue;
      std::vector<Elem> gens = cur.generators();
      gens.push_back(x);
      Subgroup next = subgroup_generated(g, gens);
      if (seen.count(next.mask())) continue;
      if (intersection(next, d).order() != 1) continue;
      seen.insert(next.mask());
      candidates.push_back(std::move(next));
      if (candidates.size() > kSubgroupCap)
        throw CapExceeded(g.name() + ": too many central subgroups to search for a direct factor");
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() > b.order(); });

  const QuotientMap ab = quotient(g, d);
  const Group& abar = *ab.quotient;
  for (const Subgroup& h : candidates) {
    if (h.is_trivial()) break;
    // H is a direct factor iff its image is a direct summand of G/G'; build a
    // complement there by lifting a basis of (G/G')/H̄ to elements of equal order.
    const Subgroup hbar = ab.image(h);
    const QuotientMap top = quotient(abar, hbar);
    const AbelianInvariants basis = abelian_invariants(*top.quotient);
    std::vector<Elem> comp_gens;
    bool ok = true;
    for (int i = 0; i < basis.rank() && ok; ++i) {
      std::int64_t q = 1;
      for (int k = 0; k < basis.exponents[i]; ++k) q *= g.prime();
      const Elem x = top.lift[basis.basis[i]];
      const Elem target = abar.pow(x, q);
      ok = false;
      for (Elem y : hbar.elements())
        if (abar.pow(y, q) == target) {
          comp_gens.push_back(abar.mul(x, abar.inv(y)));
          ok = true;
          break;
        }
    }
    if (!ok) continue;
    const Subgroup cbar = subgroup_generated(abar, comp_gens);
    if (static_cast<std::int64_t>(cbar.order()) * hbar.order() != abar.order()) continue;
    if (intersection(cbar, hbar).order() != 1) continue;
    const Subgroup k = ab.preimage(cbar);
    if (intersection(h, k).order() != 1) continue;
    if (static_cast<std::int64_t>(h.order()) * k.order() != g.order()) continue;
    return DirectFactorSplit{h, k};
  }
  return std::nullopt;
}

bool case2a_predicate(const Group& g) {
  if (g.order() == 1) return false;
  const Subgroup z = center(g);
  const Subgroup phi = frattini(g);
  if (exponent(z) > g.prime() || !z.is_subset_of(phi) || z.order() == phi.order()) return false;
  for (const Subgroup& m : maximal_subgroups(g))
    if (center_of(m).order() == z.order()) return false;
  return !(centralizer(g, center_of(phi)) == phi);
}

std::optional<CentralProduct> central_product_decomposition(const Group& g, PairScan mode) {
  if (mode == PairScan::case2a_only && !case2a_predicate(g)) return std::nullopt;
  const auto& maxes = maximal_subgroups(g);
  const Subgroup z = center(g);
  std::vector<Subgroup> zm;
  for (const Subgroup& m : maxes) zm.push_back(center_of(m));

  CentralProduct cp;
  for (size_t i = 0; i < maxes.size(); ++i)
    for (size_t j = 0; j < maxes.size(); ++j) {
      if (i == j) continue;
      if (!join(zm[i], maxes[j]).is_whole()) continue;
      if (!(intersection(zm[i], maxes[j]) == z)) continue;
      cp.qualifying_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  if (cp.qualifying_pairs.empty()) return std::nullopt;

  cp.m_index = cp.qualifying_pairs.front().first;
  cp.n_index = cp.qualifying_pairs.front().second;
  cp.m = maxes[cp.m_index];
  cp.n = maxes[cp.n_index];
  cp.r = join(zm[cp.m_index], zm[cp.n_index]);
  cp.s = intersection(cp.m, cp.n);

  const Subgroup zr = center_of(cp.r);
  const Subgroup zs = center_of(cp.s);
  const Subgroup rs = intersection(cp.r, cp.s);
  const Subgroup crg = centralizer(g, cp.r);
  auto record = [&](std::string id, std::int64_t lhs, std::int64_t rhs, bool pass) {
    cp.identities.push_back({std::move(id), lhs, rhs, pass});
  };
  record("Z(R)=Z(G)", zr.order(), z.order(), zr == z);
  record("Z(S)=Z(G)", zs.order(), z.order(), zs == z);
  record("R∩S=Z(G)", rs.order(), z.order(), rs == z);
  const int p = g.prime();
  bool elementary = true;
  for (Elem x : cp.r.elements())
    if (!zr.contains(g.pow(x, p))) elementary = false;
  record("|R:Z(R)|=p^2", cp.r.order() / zr.order(), static_cast<std::int64_t>(p) * p,
         cp.r.order() == zr.order() * p * p && elementary);
  record("S=C_G(R)", cp.s.order(), crg.order(), cp.s == crg);
  const Subgroup rscomm = commutator_subgroup(cp.r, cp.s);
  record("[R,S]=1", rscomm.order(), 1, rscomm.is_trivial());
  const Subgroup prod = join(cp.r, cp.s);
  record("RS=G", prod.order(), g.order(), prod.is_whole());
  cp.verified = std::all_of(cp.identities.begin(), cp.identities.end(),
                            [](const IdentityCheck& c) { return c.pass; });
  return cp;
}

}  // namespace pgroup
