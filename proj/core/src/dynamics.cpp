#include "beba/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "beba/error.hpp"

namespace beba {

void RunConfig::validate() const {
  if (max_iters < 1) throw InvalidArgument("max_iters must be at least 1");
  if (!(conv_tol > 0.0)) throw InvalidArgument("convergence tolerance must be positive");
  if (!(class_tol >= conv_tol)) {
    throw InvalidArgument("classification tolerance must be >= convergence tolerance");
  }
}

std::string_view to_string(OutcomeKind kind) noexcept {
  switch (kind) {
    case OutcomeKind::Consensus: return "consensus";
    case OutcomeKind::Polarized: return "polarized";
    case OutcomeKind::PersistentDisagreement: return "persistent_disagreement";
    case OutcomeKind::NotConverged: return "not_converged";
  }
  return "unknown";
}

std::optional<OutcomeKind> outcome_kind_from_string(std::string_view text) noexcept {
  for (OutcomeKind k : {OutcomeKind::Consensus, OutcomeKind::Polarized,
                        OutcomeKind::PersistentDisagreement, OutcomeKind::NotConverged}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

double mean(std::span<const double> y) noexcept {
  if (y.empty()) return 0.0;
  double sum = 0.0;
  for (double v : y) sum += v;
  return sum / static_cast<double>(y.size());
}

double variance(std::span<const double> y) noexcept {
  if (y.empty()) return 0.0;
  const double mu = mean(y);
  double acc = 0.0;
  for (double v : y) acc += (v - mu) * (v - mu);
  return acc / static_cast<double>(y.size());
}

OutcomeKind classify(std::span<const double> y, bool moved, double class_tol) noexcept {
  if (!moved) return OutcomeKind::NotConverged;
  if (y.empty()) return OutcomeKind::Consensus;
  const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
  if (*hi - *lo <= class_tol) return OutcomeKind::Consensus;
  const bool extreme =
      std::all_of(y.begin(), y.end(), [&](double v) { return std::abs(v) >= 1.0 - class_tol; });
  if (extreme && *lo < 0.0 && *hi > 0.0) return OutcomeKind::Polarized;
  return OutcomeKind::PersistentDisagreement;
}

namespace {

double sup_distance(std::span<const double> a, std::span<const double> b) noexcept {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Generic synchronous iteration. `step(in, out, guard_hits)` fills `out`.
template <typename Step>
RunResult iterate(std::vector<double> state, const RunConfig& cfg, Step&& step) {
  cfg.validate();
  RunResult result;
  Trajectory& traj = result.trajectory;
  const bool recording = cfg.record_every > 0;
  auto record = [&](std::size_t t, const std::vector<double>& values) {
    traj.snapshots.push_back({t, values});
    traj.variances.push_back(variance(values));
  };
  if (recording) record(0, state);

  std::vector<double> next(state.size());
  std::vector<NodeId> guard_hits;
  std::size_t t = 0;
  double movement = 0.0;
  bool converged = false;

  while (t < cfg.max_iters) {
    guard_hits.clear();
    step(std::span<const double>(state), std::span<double>(next), recording ? &guard_hits : nullptr);
    movement = sup_distance(state, next);
    for (NodeId node : guard_hits) traj.guard_events.push_back({t, node});
    state.swap(next);
    ++t;
    if (recording && t % cfg.record_every == 0) record(t, state);
    if (movement <= cfg.conv_tol) {
      converged = true;
      break;
    }
  }
  if (recording && traj.snapshots.back().t != t) record(t, state);

  Outcome& out = result.outcome;
  out.kind = classify(state, converged, cfg.class_tol);
  out.mean = mean(state);
  out.variance = variance(state);
  out.iters = t;
  out.last_movement = movement;
  if (out.kind == OutcomeKind::Polarized) {
    out.pattern.reserve(state.size());
    for (double v : state) out.pattern.push_back(v > 0.0 ? 1 : -1);
  }
  out.final_opinions = std::move(state);
  return result;
}

}  // namespace

RunResult run_degroot(const Graph& g, const OpinionVector& x0, const RunConfig& cfg) {
  detail::validate(g, x0);
  require_connected(g, "DeGroot run");
  const Scale scale = x0.scale();
  return iterate(x0.vector(), cfg, [&](auto in, auto out, std::vector<NodeId>*) {
    detail::degroot_into(g, in, out, scale);
  });
}

RunResult run_bof(const Graph& g, const OpinionVector& x0, const BofParams& params,
                  const RunConfig& cfg) {
  detail::validate(g, x0);
  detail::validate(g, params);
  if (x0.scale() != Scale::Unit) throw InvalidArgument("BOF operates on opinions in [0, 1]");
  require_connected(g, "BOF run");
  return iterate(x0.vector(), cfg, [&](auto in, auto out, std::vector<NodeId>*) {
    detail::bof_into(g, in, out, params.bias);
  });
}

RunResult run_beba(const Graph& g, const OpinionVector& y0, const BebaParams& params,
                   const RunConfig& cfg) {
  detail::validate(g, y0);
  detail::validate(g, params);
  if (y0.scale() != Scale::Signed) throw InvalidArgument("BEBA operates on opinions in [-1, 1]");
  require_connected(g, "BEBA run");
  return iterate(y0.vector(), cfg, [&](auto in, auto out, std::vector<NodeId>* hits) {
    detail::beba_into(g, in, out, params.beta, hits);
  });
}

FixedEnvRun run_fixed_env(double y0, const FixedEnvironment& env, const RunConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(y0) || y0 < -1.0 || y0 > 1.0) {
    throw InvalidArgument("initial opinion must lie in [-1, 1]");
  }
  FixedEnvRun run;
  const bool recording = cfg.record_every > 0;
  if (recording) run.trajectory.push_back(y0);

  const double m = static_cast<double>(env.m());
  double y = y0;
  while (run.iters < cfg.max_iters) {
    // Same expression as fixed_env_step's guard.
    if (env.self_weight() + env.beta() * env.s() * y + m <= 0.0) run.guard_steps.push_back(run.iters);
    const double next = fixed_env_step(y, env);
    const double movement = std::abs(next - y);
    y = next;
    ++run.iters;
    if (recording && run.iters % cfg.record_every == 0) run.trajectory.push_back(y);
    if (movement <= cfg.conv_tol) {
      run.converged = true;
      break;
    }
  }
  if (recording && run.iters % cfg.record_every != 0) run.trajectory.push_back(y);
  run.limit = y;
  return run;
}

}  // namespace beba
