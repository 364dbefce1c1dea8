#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hagge/rational.hpp"
#include "hagge/scene.hpp"

namespace hagge {

/// Bounds and rejection rules for random canonical rational scenes.
struct ScenePolicy {
  std::int64_t max_abs_numerator = 64;
  std::int64_t max_denominator = 64;
  /// Pairwise |a - b| lower bound on vertex parameters.
  Rational min_param_separation = Rational(1, 64);
  /// Generate P = O (k = 0).
  bool zero_k = false;
  /// Permit D = O; when `force_generator_at_circumcenter` is set D is always O.
  bool allow_generator_at_circumcenter = false;
  bool force_generator_at_circumcenter = false;
  int max_attempts = 10000;

  /// Throws PolicyUnsatisfiable for nonpositive bounds.
  void validate() const;
};

/// Random arbitrary-frame double scenes.
struct DoubleScenePolicy {
  /// Vertices are drawn from [-box, box]^2.
  double box = 10.0;
  /// Lower bound on |(B - A) x (C - A)|; keeps the circumcircle well conditioned.
  double min_twice_area = 1.0;
  /// D keeps at least this fraction of the circumradius away from O, the
  /// vertices and the sidelines.
  double min_generator_clearance = 1e-3;
  int max_attempts = 10000;
};

struct VerifyOptions {
  /// Compare the oracle against the special circle with y-coefficient -2mn
  /// instead of -2n. Expected to fail; never on by default.
  bool printed_y_coefficient = false;
};

/// A scene that reproduces a failure when passed back to verify_scene.
struct Witness {
  std::variant<Scene<Rational>, Scene<double>> scene;
  std::optional<std::uint64_t> trial;
  std::optional<std::uint64_t> trial_seed;
};

struct CheckRecord {
  std::string name;
  bool pass = true;
  /// Double checks: max scaled residual. Exact checks: null on success,
  /// a description of the mismatch on failure.
  std::optional<std::string> residual;
  std::optional<Witness> witness;
  std::uint64_t passed = 0;
  std::uint64_t total = 0;
  /// Numeric residual behind `residual` for double checks.
  std::optional<double> residual_value;
};

struct Report {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::string kind;
  std::string scene_digest;
  std::vector<CheckRecord> checks;
  /// Wall time; never serialized, so reports stay byte-identical.
  std::chrono::nanoseconds elapsed{0};

  bool passed() const;
  const char* status() const { return passed() ? "PASS" : "FAIL"; }
  const CheckRecord* find(std::string_view name) const;
};

/// Per-trial seed: splitmix64(master + index).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);
inline constexpr const char* kSeedRule = "trial i uses splitmix64(seed + i)";

Scene<Rational> random_scene(std::uint64_t seed, const ScenePolicy& policy = {});
Scene<double> random_double_scene(std::uint64_t seed, const DoubleScenePolicy& policy = {});

/// Runs every construction invariant exactly. Failures are recorded, never thrown.
Report verify_scene(const Scene<Rational>& scene, const VerifyOptions& options = {});

/// Frame independence and predicted-circle membership for a double scene.
Report verify_double_scene(const Scene<double>& scene);

/// Aggregates verify_scene over random_scene(trial_seed(seed, i)). Trials run
/// on `jobs` threads (0 = hardware concurrency); results are merged in
/// trial order.
Report verify_batch(std::uint64_t trials, std::uint64_t seed, const ScenePolicy& policy = {},
                    const VerifyOptions& options = {}, unsigned jobs = 0);

Report verify_double_batch(std::uint64_t trials, std::uint64_t seed,
                           const DoubleScenePolicy& policy = {}, unsigned jobs = 0);

/// Report JSON: {"seed", "trials", "kind", "seed_rule", "scene_digest",
/// "checks": [{"name", "pass", "passed", "total", "residual", "witness"}], "status"}.
std::string report_to_json(const Report& report);

}  // namespace hagge
