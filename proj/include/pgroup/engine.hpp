#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgroup/presentation.hpp"

namespace pgroup {

/// Dense element index in [0, p^n). The identity is 0.
using Elem = std::uint16_t;

inline constexpr Elem kIdentity = 0;

/// Largest group the engine will enumerate.
inline constexpr std::int64_t kMaxGroupOrder = 4096;

/// Rewriting budget per collected word.
inline constexpr std::int64_t kCollectStepBudget = 1'000'000;

/// Exponent vector of an element over the pc-generators.
using Exponents = std::vector<int>;

class CollectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduces words to normal form under a refined pc presentation.
///
/// Multiplication by a single generator pushes it left past the tail of the
/// normal form using the conjugate relations, then folds a p-th power with
/// the power relation; all letters produced on the right are later
/// generators, so the recursion is bounded by the rank.
class Collector {
 public:
  explicit Collector(const PcPresentation& pres, std::int64_t step_budget = kCollectStepBudget);

  /// Normal form of an arbitrary word.
  Exponents collect(const Word& w) const;

  /// In-place right multiplication by generator k.
  void multiply_generator(Exponents& e, int k) const;

  /// In-place right multiplication by a word.
  void multiply_word(Exponents& e, const Word& w) const;

  const PcPresentation& presentation() const { return pres_; }

 private:
  void mul_gen(Exponents& e, int k, std::int64_t& steps) const;

  const PcPresentation& pres_;
  std::int64_t budget_;
};

Exponents collect(const PcPresentation& pres, const Word& w);

/// Base-p encoding with g1 most significant.
std::int64_t encode(const Exponents& e, int prime);
Exponents decode(std::int64_t index, int prime, int rank);

struct StructureCache;

/// A fully enumerated p-group with its multiplication table.
///
/// Immutable after construction; lazily computed structural data is stored
/// in a write-once cache that is safe to populate from several threads.
class Group {
 public:
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;
  ~Group();

  const std::string& name() const { return pres_.name; }
  const PcPresentation& presentation() const { return pres_; }
  int prime() const { return pres_.prime; }
  int rank() const { return pres_.rank; }
  int order() const { return order_; }

  Elem mul(Elem x, Elem y) const { return table_[static_cast<size_t>(x) * order_ + y]; }
  Elem inv(Elem x) const { return inverse_[x]; }
  /// g^{-1} x g
  Elem conj(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }
  /// x^{-1} y^{-1} x y
  Elem comm(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  Elem pow(Elem x, std::int64_t k) const;
  int element_order(Elem x) const { return orders_[x]; }

  /// Element for pc-generator i (0-based).
  Elem generator(int i) const { return generators_[i]; }
  const std::vector<Elem>& generators() const { return generators_; }

  Exponents exponents(Elem x) const { return decode(x, prime(), rank()); }
  Elem element(const Exponents& e) const { return static_cast<Elem>(encode(e, prime())); }
  Elem evaluate(const Word& w) const;

  /// Elements of <g_i, ..., g_n> (0-based i) are exactly the indices below this bound.
  int tail_bound(int i) const;

  bool is_abelian() const;
  int exponent() const;
  std::map<int, int> order_histogram() const;

  StructureCache& cache() const { return *cache_; }

  friend std::shared_ptr<const Group> enumerate(const PcPresentation& pres);

 private:
  explicit Group(PcPresentation pres);

  PcPresentation pres_;
  int order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<int> orders_;
  std::vector<Elem> generators_;
  std::unique_ptr<StructureCache> cache_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Builds the full multiplication table. Throws CapExceeded above kMaxGroupOrder
/// and CollectionError when collection exhausts its budget.
GroupPtr enumerate(const PcPresentation& pres);

struct ConsistencyReport {
  bool consistent = true;
  bool exhaustive = true;
  std::int64_t triples_checked = 0;
  std::vector<std::string> failures;
  /// First triple violating associativity, when one was found.
  std::optional<std::array<Elem, 3>> witness;
};

/// Exhaustive associativity at or below this order; sampled above.
inline constexpr int kExhaustiveAssociativityOrder = 1024;

ConsistencyReport consistency_check(const Group& g, std::uint64_t seed = 0x5eed);

}  // namespace pgroup
