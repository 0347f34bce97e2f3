#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pgroup/webb.hpp"

namespace pgroup {

using ordered_json = nlohmann::ordered_json;

struct Classification {
  bool cyclic = false;
  bool order_at_least_p3 = false;
  bool abelian = false;
  bool abelian_maximal = false;
  bool elementary_abelian_centre = false;
  bool centre_below_frattini = false;  // Z(G) < Φ(G), proper
  /// Elementary abelian centre but Z(G) not below Φ(G); handled by earlier
  /// results and only oracle-checked here.
  bool prior_literature = false;
  // Populated only with elementary abelian centre and Z(G) < Φ(G).
  std::optional<bool> case1, case2, case2a, case2b;
  bool powerful = false;
  bool p_central = false;
  bool class2 = false;  // G/Z(G) abelian
  int generator_rank = 0;
  int nilpotency_class = 0;

  /// In scope for divisibility: non-cyclic with |G| >= p^3.
  bool in_hypothesis() const { return !cyclic && order_at_least_p3; }
};

Classification classify(const Group& g);

enum class Relation { eq, ge, le, divides };

const char* relation_name(Relation r);
bool holds(Relation r, std::int64_t lhs, std::int64_t rhs);

/// One recorded identity; pass is recomputable as holds(rel, lhs, rhs).
struct Check {
  std::string id;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  Relation rel = Relation::eq;
  bool pass = false;
};

struct Skip {
  std::string id;
  std::string reason;
};

struct DivisibilityRecord {
  std::int64_t group_order = 0;
  std::int64_t aut_order = 0;
  std::int64_t p_part = 0;
  bool divides = false;
};

DivisibilityRecord verify_divisibility(const Group& g);

struct TheoremReport {
  std::string name;
  int prime = 0;
  int rank = 0;
  std::int64_t order = 0;
  bool consistent = true;
  std::optional<Classification> flags;
  std::vector<Check> checks;
  std::vector<Skip> skips;
  std::optional<DivisibilityRecord> divisibility;
  ordered_json witness = ordered_json::object();
  std::vector<std::string> errors;

  /// Records a check; throws std::logic_error on a repeated id.
  bool check(std::string id, std::int64_t lhs, std::int64_t rhs, Relation rel = Relation::eq);
  void skip(std::string id, std::string reason);

  const Check* find(const std::string& id) const;
  bool has_skip(const std::string& id) const;
  int failed_checks() const;
  bool ok() const { return failed_checks() == 0 && errors.empty(); }
};

/// Chain for a group with an abelian maximal subgroup (checks c1..c8).
/// Records skips instead of failing when the hypotheses do not hold.
void verify_abelian_maximal_chain(const Group& g, TheoremReport& rep);
TheoremReport verify_abelian_maximal_chain(const Group& g);

/// Chain for elementary abelian centre with Z(G) < Φ(G), routed by case.
void verify_elem_abelian_centre_chain(const Group& g, TheoremReport& rep);
TheoremReport verify_elem_abelian_centre_chain(const Group& g);

/// Webb maps for every maximal M containing Z(G), and p | |Out_Z(G)|.
void verify_webb_suite(const Group& g, TheoremReport& rep);

/// |Inn|, dual oracle on small groups, Adney-Yen or Otto, Aut^Z ∩ Inn.
void verify_automorphism_suite(const Group& g, TheoremReport& rep);

/// Everything for one presentation: consistency, classification, suites,
/// chains and divisibility. Errors are recorded, never thrown.
TheoremReport verify_presentation(const PcPresentation& pres);

struct ReportSet {
  std::vector<TheoremReport> reports;
  std::map<std::string, int> buckets;
  int failed_groups() const;
};

/// Verifies presentations with up to jobs worker threads; the result keeps
/// input order regardless of scheduling.
ReportSet run_corpus(const std::vector<PcPresentation>& corpus, int jobs = 1);

ordered_json to_json(const Classification& c);
ordered_json to_json(const TheoremReport& r);
ordered_json to_json(const ReportSet& s);
std::string to_csv(const ReportSet& s);

/// Corpus files compiled into the binary: (file name, text).
const std::vector<std::pair<std::string, std::string>>& builtin_sources();
std::vector<PcPresentation> builtin_corpus();

}  // namespace pgroup
