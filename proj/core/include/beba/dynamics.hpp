#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "beba/graph.hpp"
#include "beba/models.hpp"

namespace beba {

/// Iteration and classification settings.
struct RunConfig {
  std::size_t max_iters = 10000;
  /// Sup-norm movement at or below which a run counts as converged.
  double conv_tol = 1e-9;
  /// Spread / extremeness threshold used by classify().
  double class_tol = 1e-6;
  /// Keep every k-th state in the trajectory; 0 disables recording.
  std::size_t record_every = 1;

  /// Throws InvalidArgument unless max_iters >= 1, conv_tol > 0 and
  /// class_tol >= conv_tol.
  void validate() const;
};

enum class OutcomeKind { Consensus, Polarized, PersistentDisagreement, NotConverged };

std::string_view to_string(OutcomeKind kind) noexcept;
std::optional<OutcomeKind> outcome_kind_from_string(std::string_view text) noexcept;

/// Classified end state of a run.
struct Outcome {
  OutcomeKind kind = OutcomeKind::NotConverged;
  /// Arithmetic mean of the final vector: the consensus value y* for
  /// Consensus, the mean polarized opinion for Polarized.
  double mean = 0.0;
  /// Per-node sign (+1 / -1) of the final vector; filled for Polarized only.
  std::vector<int> pattern;
  std::vector<double> final_opinions;
  std::size_t iters = 0;
  double variance = 0.0;
  /// Sup-norm movement of the last step taken.
  double last_movement = 0.0;

  std::optional<double> consensus_value() const {
    return kind == OutcomeKind::Consensus ? std::optional<double>(mean) : std::nullopt;
  }
  std::optional<double> mean_polarized_opinion() const {
    return kind == OutcomeKind::Polarized ? std::optional<double>(mean) : std::nullopt;
  }
};

struct Snapshot {
  std::size_t t = 0;
  std::vector<double> values;
};

struct GuardEvent {
  std::size_t t = 0;  // step index producing the guarded value (t -> t + 1)
  NodeId node = 0;
};

/// Recorded history of a run. Snapshots start at t = 0 and are strictly
/// increasing; the final state is always included when recording is on.
struct Trajectory {
  std::vector<Snapshot> snapshots;
  std::vector<double> variances;  // one per snapshot
  std::vector<GuardEvent> guard_events;
};

struct RunResult {
  Outcome outcome;
  Trajectory trajectory;
};

/// Population variance (divides by n). 0 for an empty input.
double variance(std::span<const double> y) noexcept;
double mean(std::span<const double> y) noexcept;

/// Outcome taxonomy for a final state. `moved` is true when the last step's
/// movement was within conv_tol; NotConverged iff it is false.
///   Consensus: max - min <= class_tol
///   Polarized: every |y_i| >= 1 - class_tol and both signs present
///   PersistentDisagreement: otherwise
OutcomeKind classify(std::span<const double> y, bool moved, double class_tol) noexcept;

RunResult run_degroot(const Graph& g, const OpinionVector& x0, const RunConfig& cfg = {});
RunResult run_bof(const Graph& g, const OpinionVector& x0, const BofParams& params,
                  const RunConfig& cfg = {});
RunResult run_beba(const Graph& g, const OpinionVector& y0, const BebaParams& params,
                   const RunConfig& cfg = {});

/// Result of iterating a single agent against a fixed environment.
struct FixedEnvRun {
  double limit = 0.0;
  bool converged = false;
  std::size_t iters = 0;
  /// Recorded states (every cfg.record_every steps, plus the last one).
  std::vector<double> trajectory;
  /// Step indices at which the sign guard fired.
  std::vector<std::size_t> guard_steps;
};

FixedEnvRun run_fixed_env(double y0, const FixedEnvironment& env, const RunConfig& cfg = {});

}  // namespace beba
