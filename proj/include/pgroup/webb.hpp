#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/automorphism.hpp"

namespace pgroup {

/// tau(m) = g^{-p} (g m)^p and gamma(m) = [m, g] evaluated on Z(M).
struct WebbData {
  const Group* group = nullptr;
  Subgroup m;
  Elem g = kIdentity;  // G/M = <gM>
  Subgroup zm;         // Z(M)
  std::vector<Elem> tau;    // indexed like zm.elements()
  std::vector<Elem> gamma;
  Subgroup im_tau, ker_tau, im_gamma, ker_gamma;
  /// im gamma <= ker tau, im tau <= ker gamma, ker gamma = Z(G) ∩ M,
  /// tau(gamma(m)) = 1, and both maps multiplicative. Pointwise.
  std::vector<IdentityCheck> checks;

  bool all_checks_pass() const;
};

/// g defaults to the least element outside M. Throws std::invalid_argument
/// if M is not a maximal subgroup or g lies in M.
WebbData webb_maps(const Group& g, const Subgroup& m, std::optional<Elem> rep = std::nullopt);

struct WebbVerdict {
  WebbData data;
  bool non_inner_exists = false;   // im tau != ker gamma
  std::int64_t predicted_out = 1;  // |ker gamma| / |im tau| when the verdict holds
  std::int64_t oracle_out = 0;     // image of Aut_M^M(G) in Out(G)
  std::int64_t oracle_aut = 0;     // |Aut_M^M(G)|
  Elem second_rep = kIdentity;
  bool representative_invariant = false;  // same im tau, ker gamma with second_rep
};

/// Criterion for a non-abelian G and a maximal M containing Z(G); the
/// prediction is compared against restricted_aut(G, M, M).
/// Throws PreconditionError when G is abelian or Z(G) is not inside M.
WebbVerdict webb_criterion(const Group& g, const Subgroup& m);

struct TauMRecord {
  WebbData data;
  std::int64_t zm_over_zg = 0;  // |Z(M) : Z(G)|
  std::int64_t g_over_n = 0;    // |G : N|
  std::int64_t im_tau_order = 0;
  std::string branch;  // "im_tau=1" or "im_tau=C_p"
  std::int64_t predicted_out_mm = 0;
};

/// tau_M for a pair (M, N) with G = Z(M) N and Z(G) = Z(M) ∩ N.
/// Throws PreconditionError when the pair does not qualify.
TauMRecord tau_m(const Group& g, const Subgroup& m, const Subgroup& n);

}  // namespace pgroup
