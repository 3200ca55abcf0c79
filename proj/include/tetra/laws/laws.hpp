#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tetra/calculus/graded.hpp"

namespace tetra::laws {

enum class Applicability {
  kBoth,      // runs on the configured backend
  kEndoOnly,  // needs an associative μ; skipped on the free backend
  kCross,     // always compares free words against endo maps
};

struct LawInfo {
  std::string id;
  std::string description;
  /// The identity being checked, in formula form.
  std::string anchor;
  /// Names of the sampled arguments, in order (μ is implicit).
  std::vector<std::string> roles;
  Applicability applicability = Applicability::kBoth;
  /// Force deg of the first argument >= 3 on even trials so the ground
  /// tetrahedron is nonempty at least half the time.
  bool tetra = false;
};

/// Stable order, unique ids.
const std::vector<LawInfo>& list_laws();
/// kUnknownLaw when absent.
const LawInfo& find_law(std::string_view id);

struct TrialConfig {
  BackendKind backend = BackendKind::kEndo;
  std::uint32_t prime = 97;
  int dim = 1;
  int trials = 200;
  std::uint64_t seed = 42;
  int max_degree = 5;
  /// Bound on the sum of sampled degrees; 0 picks a default from dim and backend.
  int degree_budget = 0;
  Canary canary = Canary::kNone;

  /// kBadConfig on nonsense values.
  void validate() const;
  int effective_budget() const;
};

/// A concrete failing instance: enough to re-run the check without the seed.
struct Witness {
  std::string law_id;
  BackendKind backend = BackendKind::kEndo;
  std::uint32_t prime = 97;
  int dim = 1;
  Canary canary = Canary::kNone;
  std::uint64_t seed = 0;
  std::vector<int> degrees;
  /// μ first, then one element per role.
  std::vector<GradedElement> elements;
  std::string identity;
  std::optional<GradedElement> lhs, rhs;
  std::optional<Point> domain_point;

  int degree_sum() const;
};

enum class Status { kPass, kFail, kUnderpowered, kSkipped };
std::string to_string(Status status);

struct Report {
  std::string law_id;
  Status status = Status::kPass;
  int trials = 0;
  int vacuous = 0;
  int redraws = 0;
  std::vector<Witness> failures;
  /// Non-vacuous trials keyed by the degree of the first argument.
  std::map<int, int> lead_degrees;
  double millis = 0;
  std::string note;
};

Report run_law(std::string_view law_id, const TrialConfig& cfg);
std::vector<Report> run_all(const TrialConfig& cfg);

/// Samples the instance a trial draws for (seed, degrees) and checks it.
/// Returns the witness when the check fails.
std::optional<Witness> probe_instance(std::string_view law_id, const TrialConfig& cfg, std::uint64_t seed,
                                      const std::vector<int>& degrees);

/// True when the witness still fails its law.
bool reproduces(const Witness& w);

/// Greedy reduction: lower degrees (resampling from the witness seed), then
/// zero entries or terms, repeated to a fixpoint. Idempotent.
Witness shrink(const Witness& w);

nlohmann::ordered_json to_json(const Witness& w);
Witness witness_from_json(const nlohmann::ordered_json& j);
/// Report JSON. Timing lives only in "millis".
nlohmann::ordered_json to_json(const Report& r);
nlohmann::ordered_json to_json(const std::vector<Report>& reports, const TrialConfig& cfg);

}  // namespace tetra::laws
