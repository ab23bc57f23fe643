#pragma once

#include <cstdint>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "monorel/minty.hpp"
#include "monorel/relation.hpp"

namespace monorel {

/// Options for the randomized invariant battery.  Identical options produce
/// byte-identical JSON output; per-instance seeds are derived from `seed`,
/// the profile and the instance index only.
struct BatteryOptions {
  std::uint64_t seed = 42;
  int dim = 6;
  int count = 200;                  ///< instances per profile
  std::optional<Profile> profile;   ///< restrict to a single profile
  Tolerance tol{};
  int coupling_samples = 1000;      ///< graph points sampled per instance
};

struct BatteryFailure {
  std::string profile;
  int index = 0;
  std::string check;
  std::string detail;
  /// Relation file document reproducing the instance, for replay.
  nlohmann::json counterexample;
};

struct ProfileSummary {
  std::string profile;
  int instances = 0;
  long checks_passed = 0;
  long checks_failed = 0;
};

struct BatteryResult {
  bool ok = true;
  std::vector<ProfileSummary> profiles;
  std::vector<BatteryFailure> failures;

  /// Deterministic serialization (no timing or host information).
  nlohmann::json to_json(const BatteryOptions& opts) const;
};

using InstanceProvider =
    std::function<LinearRelation(std::uint64_t seed, int dim, Profile profile, int index)>;

/// Runs every module's invariant suite over seeded random instances:
/// graph bookkeeping identities, adjoint involution and sum rules, the
/// criteria-agreement battery, Minty round trips, decomposition structure,
/// quadratic-form identities, certificate cross-checks.  Any failure records
/// the instance as a counterexample document.
BatteryResult run_battery(const BatteryOptions& opts);

/// Same, with a custom instance source (used to exercise the failure path).
BatteryResult run_battery(const BatteryOptions& opts, const InstanceProvider& provider);

}  // namespace monorel
