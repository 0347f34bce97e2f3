#pragma once

#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgroup/engine.hpp"

namespace pgroup {

/// A subgroup of an enumerated group, stored as a membership mask.
///
/// Holds a non-owning pointer to its group; the group must outlive it.
class Subgroup {
 public:
  Subgroup() = default;

  /// Mask must describe a subgroup; generators are chosen greedily in index order.
  static Subgroup from_mask(const Group& g, std::vector<char> mask);
  static Subgroup from_mask(const Group& g, std::vector<char> mask, std::vector<Elem> gens);

  const Group& group() const { return *group_; }
  bool contains(Elem x) const { return mask_[x] != 0; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Elem>& elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return gens_; }
  const std::vector<char>& mask() const { return mask_; }

  bool is_trivial() const { return order() == 1; }
  bool is_whole() const { return order() == group_->order(); }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.mask_ == b.mask_;
  }

 private:
  const Group* group_ = nullptr;
  std::vector<char> mask_;
  std::vector<Elem> elements_;
  std::vector<Elem> gens_;
};

Subgroup whole_group(const Group& g);
Subgroup trivial_subgroup(const Group& g);
Subgroup subgroup_generated(const Group& g, std::span<const Elem> gens);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// Smallest normal subgroup containing the given elements.
Subgroup normal_closure(const Group& g, std::span<const Elem> elems);

bool is_normal(const Subgroup& s);
bool is_abelian(const Subgroup& s);
int exponent(const Subgroup& s);

Subgroup centralizer(const Group& g, const Subgroup& s);
Subgroup center(const Group& g);
/// Z(S) = S ∩ C_G(S).
Subgroup center_of(const Subgroup& s);
/// [A, B], generated by all [a, b].
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(const Group& g);
Subgroup second_center(const Group& g);
/// Subgroup generated by all x^k.
Subgroup power_subgroup(const Group& g, int k);
/// Subgroup generated by all elements with x^{p^k} = 1.
Subgroup omega(const Group& g, int k);
/// Elements of order dividing p in an abelian subgroup.
Subgroup omega1(const Subgroup& a);

/// Index-p subgroups, as kernels of the homomorphisms G -> C_p. Ordered by
/// the homomorphism's coefficient vector, which makes the list deterministic.
const std::vector<Subgroup>& maximal_subgroups(const Group& g);

Subgroup frattini_by_maximals(const Group& g);
Subgroup frattini_by_powers(const Group& g);
/// Φ(G); both routes are computed and must agree (std::logic_error otherwise).
Subgroup frattini(const Group& g);
/// d(G) = log_p |G : Φ(G)|.
int generator_rank(const Group& g);
int log_p(std::int64_t n, int p);

std::vector<Subgroup> lower_central_series(const Group& g);
int nilpotency_class(const Group& g);

/// Projection onto an enumerated quotient group.
struct QuotientMap {
  const Group* source = nullptr;
  Subgroup kernel;
  GroupPtr quotient;
  std::vector<Elem> projection;  // source element -> quotient element
  std::vector<Elem> lift;        // quotient element -> a source representative

  Elem operator()(Elem x) const { return projection[x]; }
  Subgroup image(const Subgroup& s) const;
  Subgroup preimage(const Subgroup& s) const;
};

/// G/N, rebuilt as a group with its own pc presentation. Throws
/// std::invalid_argument when N is not normal.
QuotientMap quotient(const Group& g, const Subgroup& n);

/// A subgroup rebuilt as a group with its own (induced) pc presentation.
struct SubgroupEmbedding {
  const Group* ambient = nullptr;
  Subgroup subgroup;
  GroupPtr group;
  std::vector<Elem> embed;      // subgroup-group element -> ambient element
  std::vector<int> restriction; // ambient element -> subgroup-group element, or -1

  Elem operator()(Elem x) const { return embed[x]; }
};

SubgroupEmbedding subgroup_as_group(const Subgroup& s, std::string name = {});

/// ⊕ C_{p^{a_i}} with a_1 >= a_2 >= ... and an explicit basis.
struct AbelianInvariants {
  int prime = 2;
  std::vector<int> exponents;
  std::vector<Elem> basis;  // in the owning group; basis[i] has order p^{exponents[i]}

  int rank() const { return static_cast<int>(exponents.size()); }
  std::int64_t order() const;
  std::int64_t exponent() const;
  /// Number of elements of each order in ⊕ C_{p^{a_i}}.
  std::map<int, int> order_histogram() const;
  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
    return a.prime == b.prime && a.exponents == b.exponents;
  }
};

/// Greedy basis algorithm: repeatedly take an element of largest order modulo
/// the span so far and correct it to an element of that exact order.
/// Throws std::invalid_argument on non-abelian input.
AbelianInvariants abelian_invariants(const Subgroup& a);
AbelianInvariants abelian_invariants(const Group& g);

struct DirectFactorSplit {
  Subgroup abelian;     // H
  Subgroup complement;  // K, with G = H x K
};

/// G = H x K with H a largest abelian direct factor, so that K has no abelian
/// direct factor. Returns nullopt when G has no nontrivial abelian direct factor.
std::optional<DirectFactorSplit> abelian_direct_factor_split(const Group& g);

struct IdentityCheck {
  std::string id;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool pass = false;
};

struct CentralProduct {
  int m_index = -1;  // indices into maximal_subgroups(g)
  int n_index = -1;
  Subgroup m, n, r, s;
  std::vector<std::pair<int, int>> qualifying_pairs;
  std::vector<IdentityCheck> identities;
  bool verified = false;
};

/// Elementary abelian Z(G) < Φ(G), Z(M) > Z(G) for every maximal M, and
/// C_G(Z(Φ(G))) != Φ(G).
bool case2a_predicate(const Group& g);

enum class PairScan { any_group, case2a_only };

/// Scans ordered pairs of maximal subgroups for (M, N) with Z(M)N = G and
/// Z(M) ∩ N = Z(G), then forms R = Z(M)Z(N), S = M ∩ N and records the
/// identities Z(R) = Z(G) = Z(S) = R ∩ S, |R : Z(R)| = p^2 (elementary
/// abelian quotient), S = C_G(R), [R, S] = 1 and RS = G. With case2a_only
/// the scan is skipped (nullopt) unless case2a_predicate holds.
std::optional<CentralProduct> central_product_decomposition(const Group& g,
                                                            PairScan mode = PairScan::case2a_only);

struct StructureCache {
  std::once_flag center_once, derived_once, frattini_once, maximal_once, second_center_once;
  std::optional<Subgroup> center, derived, frattini, second_center;
  std::vector<Subgroup> maximal;
};

}  // namespace pgroup
