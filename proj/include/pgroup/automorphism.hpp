#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "pgroup/structure.hpp"

namespace pgroup {

/// An automorphism recorded as its full image table.
struct Automorphism {
  const Group* group = nullptr;
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images[x]; }
  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.images == b.images;
  }
};

Automorphism identity_automorphism(const Group& g);
Automorphism conjugation(const Group& g, Elem by);  // x -> by^{-1} x by
/// (a ∘ b)(x) = a(b(x))
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism inverse(const Automorphism& a);
int automorphism_order(const Automorphism& a);
bool is_identity(const Automorphism& a);
/// Exhaustive φ(xy) = φ(x)φ(y) over all pairs, plus bijectivity.
bool is_automorphism(const Group& g, std::span<const Elem> images);

/// Pc-generators independent modulo Φ(G), taken greedily in order; a minimal
/// generating set by the Burnside basis theorem.
std::vector<Elem> minimal_generators(const Group& g);

/// Hard cap on search-tree nodes for a single automorphism search.
inline constexpr std::int64_t kSearchNodeCap = 400'000'000;
/// Automorphism lists longer than this are counted but not stored.
inline constexpr std::int64_t kStoredAutomorphismCap = 2'000'000;

/// Constraints defining a subgroup of Aut(G) for the backtracking search.
struct AutConstraints {
  /// φ(x) x^{-1} ∈ top for all x (acts trivially on G/top). Null means G.
  const Subgroup* top = nullptr;
  /// φ fixes every element of fixed pointwise. Null means trivial.
  const Subgroup* fixed = nullptr;
};

/// A subgroup of Aut(G) found by backtracking over images of a minimal
/// generating set. Members are stored as generator-image tuples; full tables
/// are materialized on demand.
class AutGroup {
 public:
  const Group& group() const { return *group_; }
  std::int64_t order() const { return order_; }
  bool stored() const { return stored_; }
  std::int64_t size() const { return stored_ ? static_cast<std::int64_t>(tuples_.size() / width()) : 0; }
  const std::vector<Elem>& generating_set() const { return gens_; }

  std::span<const Elem> tuple(std::int64_t i) const;
  Automorphism at(std::int64_t i) const;
  /// Number of members that are inner automorphisms.
  std::int64_t inner_count() const { return inner_count_; }
  /// Order of the image in Out(G) = |X| / |X ∩ Inn(G)|.
  std::int64_t out_image_order() const { return order_ / inner_count_; }

  friend AutGroup search_automorphisms(const Group&, const AutConstraints&, bool);

 private:
  size_t width() const { return gens_.empty() ? 1 : gens_.size(); }

  const Group* group_ = nullptr;
  std::vector<Elem> gens_;
  std::vector<Elem> tuples_;
  std::int64_t order_ = 0;
  std::int64_t inner_count_ = 1;
  bool stored_ = false;
};

/// Backtracking search. With store = true every member is enumerated and kept
/// (falls back to counting above kStoredAutomorphismCap); otherwise only the
/// order is computed, as a product of orbit lengths along the generating set.
AutGroup search_automorphisms(const Group& g, const AutConstraints& c = {}, bool store = false);

/// Aut(G); members are stored when |Aut(G)| fits the storage cap.
AutGroup automorphism_group(const Group& g);
/// Aut(G) order only.
std::int64_t automorphism_count(const Group& g);

/// Visits every automorphism meeting the constraints; the visitor returns
/// false to stop early.
void for_each_automorphism(const Group& g, const AutConstraints& c,
                           const std::function<bool(const Automorphism&)>& visit);

/// Independent route to |Aut(G)|: counts tuples of images of all
/// pc-generators that satisfy every defining relation and generate G.
std::int64_t count_relation_compatible_tuples(const Group& g);

/// Distinct conjugation maps.
std::vector<Automorphism> inner_automorphisms(const Group& g);
std::int64_t inner_order(const Group& g);
std::int64_t out_order(const Group& g);
std::int64_t p_part(std::int64_t m, int p);

/// True when a is conjugation by some element.
bool is_inner(const Automorphism& a);

/// Aut_N^M(G): automorphisms centralizing G/M and N, stored.
AutGroup restricted_aut(const Group& g, const Subgroup& m, const Subgroup& n);

/// |Hom(A, B)| for abelian p-groups: prod p^{min(a_i, b_j)}.
std::int64_t hom_count_abelian(const AbelianInvariants& a, const AbelianInvariants& b);

/// Homomorphisms G/G' -> Z(G), as images of a basis of G/G'.
struct HomFamily {
  QuotientMap abelianization;     // G -> G/G'
  AbelianInvariants source_basis; // basis in G/G'
  Subgroup target;                // Z(G)
  std::vector<std::vector<Elem>> members;  // basis images, in G

  /// f(x G') for a member, evaluated through basis coordinates.
  Elem evaluate(size_t member, Elem x) const;
  std::vector<int> coordinates(Elem quotient_elem) const;

  std::vector<std::vector<int>> coordinate_table;  // quotient element -> basis coordinates
};

/// G -> G/G' with a basis and coordinate table; members left empty.
HomFamily abelianization_family(const Group& g);
HomFamily homs_to_center(const Group& g);
/// Homomorphism G/G' -> Z(G) from explicit basis images (checked for validity).
std::optional<std::vector<Elem>> hom_from_basis_images(const HomFamily& fam,
                                                       std::vector<Elem> images);

/// x -> x f(xG'); nullopt when not bijective. Throws std::logic_error if the
/// map fails to be an endomorphism.
std::optional<Automorphism> central_aut_from_hom(const Group& g, const HomFamily& fam,
                                                 std::span<const Elem> basis_images);

struct AdneyYenRecord {
  std::int64_t autz_order = 0;
  std::int64_t hom_count = 0;
  std::int64_t bijective_from_homs = 0;
  bool equal = false;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |Aut^Z(G)| (automorphisms trivial on G/Z(G), by search) against
/// |Hom(G/G', Z(G))|. Throws PreconditionError when G has an abelian direct factor.
AdneyYenRecord adney_yen_check(const Group& g);

}  // namespace pgroup
