#include "pgroup/engine.hpp"

#include <algorithm>
#include <random>

#include "pgroup/structure.hpp"

namespace pgroup {

Collector::Collector(const PcPresentation& pres, std::int64_t step_budget)
    : pres_(pres), budget_(step_budget) {}

void Collector::mul_gen(Exponents& e, int k, std::int64_t& steps) const {
  if (++steps > budget_)
    throw CollectionError("collection of a word in " + pres_.name + " exceeded " +
                          std::to_string(budget_) + " rewriting steps");
  const int n = pres_.rank;
  const int p = pres_.prime;
  // x * g_k = (g_1^e_1 .. g_k^(e_k+1)) * prod_{j>k} (g_j^{g_k})^{e_j}
  Exponents tail(e.begin() + k + 1, e.end());
  std::fill(e.begin() + k + 1, e.end(), 0);
  if (++e[k] == p) {
    e[k] = 0;
    for (const Letter& l : pres_.power[k])
      for (int r = 0; r < l.exp; ++r) mul_gen(e, l.gen, steps);
  }
  for (int j = k + 1; j < n; ++j)
    for (int t = 0; t < tail[j - k - 1]; ++t)
      for (const Letter& l : pres_.conj[k][j])
        for (int r = 0; r < l.exp; ++r) mul_gen(e, l.gen, steps);
}

void Collector::multiply_generator(Exponents& e, int k) const {
  std::int64_t steps = 0;
  mul_gen(e, k, steps);
}

void Collector::multiply_word(Exponents& e, const Word& w) const {
  std::int64_t steps = 0;
  for (const Letter& l : w) {
    if (l.gen < 0 || l.gen >= pres_.rank) throw CollectionError("word references unknown generator");
    for (int r = 0; r < l.exp; ++r) mul_gen(e, l.gen, steps);
  }
}

Exponents Collector::collect(const Word& w) const {
  Exponents e(pres_.rank, 0);
  multiply_word(e, w);
  return e;
}

Exponents collect(const PcPresentation& pres, const Word& w) { return Collector(pres).collect(w); }

std::int64_t encode(const Exponents& e, int prime) {
  std::int64_t idx = 0;
  for (int x : e) idx = idx * prime + x;
  return idx;
}

Exponents decode(std::int64_t index, int prime, int rank) {
  Exponents e(rank, 0);
  for (int i = rank - 1; i >= 0; --i) {
    e[i] = static_cast<int>(index % prime);
    index /= prime;
  }
  return e;
}

Group::Group(PcPresentation pres) : pres_(std::move(pres)), cache_(std::make_unique<StructureCache>()) {}

Group::~Group() = default;

Elem Group::pow(Elem x, std::int64_t k) const {
  if (orders_[x] == 0) {
    // Only reachable on tables that failed to close up; fall back to repetition.
    Elem r = kIdentity;
    for (std::int64_t t = 0; t < k; ++t) r = mul(r, x);
    return r;
  }
  k %= orders_[x];
  if (k < 0) k += orders_[x];
  Elem result = kIdentity;
  Elem base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem Group::evaluate(const Word& w) const {
  Elem x = kIdentity;
  for (const Letter& l : w) x = mul(x, pow(generators_.at(l.gen), l.exp));
  return x;
}

int Group::tail_bound(int i) const {
  int b = 1;
  for (int k = i; k < rank(); ++k) b *= prime();
  return b;
}

bool Group::is_abelian() const {
  for (Elem a : generators_)
    for (Elem b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int Group::exponent() const { return *std::max_element(orders_.begin(), orders_.end()); }

std::map<int, int> Group::order_histogram() const {
  std::map<int, int> h;
  for (int o : orders_) ++h[o];
  return h;
}

GroupPtr enumerate(const PcPresentation& pres) {
  validate(pres);
  std::int64_t size = 1;
  for (int i = 0; i < pres.rank; ++i) {
    size *= pres.prime;
    if (size > kMaxGroupOrder)
      throw CapExceeded(pres.name + ": order " + std::to_string(pres.prime) + "^" +
                        std::to_string(pres.rank) + " exceeds the enumeration cap of " +
                        std::to_string(kMaxGroupOrder));
  }
  const int order = static_cast<int>(size);
  const int n = pres.rank;
  const int p = pres.prime;

  std::shared_ptr<Group> g(new Group(pres));
  g->order_ = order;

  // x * g_k for every element and generator.
  Collector collector(g->pres_);
  std::vector<Elem> by_gen(static_cast<size_t>(order) * n);
  for (int x = 0; x < order; ++x)
    for (int k = 0; k < n; ++k) {
      Exponents e = decode(x, p, n);
      collector.multiply_generator(e, k);
      by_gen[static_cast<size_t>(x) * n + k] = static_cast<Elem>(encode(e, p));
    }

  // A normal form ends in its last nonzero generator, so y = y' * g_j with y' < y.
  std::vector<int> last_gen(order, -1);
  std::vector<Elem> drop_last(order, 0);
  for (int y = 1; y < order; ++y) {
    Exponents e = decode(y, p, n);
    int j = n - 1;
    while (e[j] == 0) --j;
    last_gen[y] = j;
    --e[j];
    drop_last[y] = static_cast<Elem>(encode(e, p));
  }
  g->table_.resize(static_cast<size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    Elem* row = &g->table_[static_cast<size_t>(x) * order];
    row[0] = static_cast<Elem>(x);
    for (int y = 1; y < order; ++y)
      row[y] = by_gen[static_cast<size_t>(row[drop_last[y]]) * n + last_gen[y]];
  }

  g->inverse_.assign(order, 0);
  g->orders_.assign(order, 0);
  for (int x = 0; x < order; ++x) {
    const Elem* row = &g->table_[static_cast<size_t>(x) * order];
    int inverse = -1;
    for (int y = 0; y < order; ++y)
      if (row[y] == kIdentity) {
        inverse = y;
        break;
      }
    // A right inverse may be missing in an inconsistent table; keep 0 and let
    // consistency_check report it.
    g->inverse_[x] = static_cast<Elem>(inverse < 0 ? 0 : inverse);
    Elem cur = static_cast<Elem>(x);
    int k = 1;
    while (cur != kIdentity && k <= order) {
      cur = g->mul(cur, static_cast<Elem>(x));
      ++k;
    }
    g->orders_[x] = cur == kIdentity ? k : 0;
  }

  g->generators_.resize(n);
  for (int i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    g->generators_[i] = static_cast<Elem>(encode(e, p));
  }
  return g;
}

ConsistencyReport consistency_check(const Group& g, std::uint64_t seed) {
  ConsistencyReport rep;
  const int order = g.order();
  auto fail = [&](std::string msg) {
    rep.consistent = false;
    if (rep.failures.size() < 16) rep.failures.push_back(std::move(msg));
  };

  for (int x = 0; x < order; ++x) {
    const Elem e = static_cast<Elem>(x);
    if (g.mul(kIdentity, e) != e || g.mul(e, kIdentity) != e)
      fail("identity axiom fails at element " + std::to_string(x));
    if (g.mul(e, g.inv(e)) != kIdentity || g.mul(g.inv(e), e) != kIdentity)
      fail("inverse axiom fails at element " + std::to_string(x));
    if (g.element_order(e) == 0 || order % g.element_order(e) != 0)
      fail("element " + std::to_string(x) + " has an order not dividing |G|");
  }

  auto check_triple = [&](Elem x, Elem y, Elem z) {
    ++rep.triples_checked;
    if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) {
      if (!rep.witness) {
        rep.witness = std::array<Elem, 3>{x, y, z};
        fail("associativity fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
             std::to_string(z) + ")");
      }
      rep.consistent = false;
      return false;
    }
    return true;
  };

  if (order <= kExhaustiveAssociativityOrder) {
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < order; ++y) {
        for (int z = 0; z < order; ++z)
          check_triple(static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z));
      }
  } else {
    rep.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, order - 1);
    for (int t = 0; t < 1'000'000; ++t)
      check_triple(static_cast<Elem>(pick(rng)), static_cast<Elem>(pick(rng)),
                   static_cast<Elem>(pick(rng)));
  }

  const PcPresentation& pres = g.presentation();
  for (int i = 0; i < g.rank(); ++i) {
    if (g.pow(g.generator(i), pres.prime) != g.evaluate(pres.power[i]))
      fail("power relation for g" + std::to_string(i + 1) + " does not hold");
    for (int j = i + 1; j < g.rank(); ++j)
      if (g.conj(g.generator(j), g.generator(i)) != g.evaluate(pres.conj[i][j]))
        fail("conjugate relation g" + std::to_string(j + 1) + " ^ g" + std::to_string(i + 1) +
             " does not hold");
  }
  return rep;
}

}  // namespace pgroup
