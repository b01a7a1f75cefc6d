#include <algorithm>
#include <string>

#include "beba/analysis.hpp"
#include "beba/error.hpp"
#include "beba/parallel.hpp"

namespace beba {

std::string_view to_string(InterventionMode mode) noexcept {
  return mode == InterventionMode::Add ? "add" : "delete";
}

std::string_view to_string(InterventionObjective objective) noexcept {
  return objective == InterventionObjective::ConsensusValue ? "consensus" : "polarized-mean";
}

InterventionReport edge_intervention(const Graph& g, const OpinionVector& y0,
                                     const BebaParams& params, InterventionMode mode,
                                     InterventionObjective objective, const RunConfig& cfg,
                                     std::size_t max_candidates, std::size_t workers) {
  require_connected(g, "edge intervention");
  RunConfig rc = cfg;
  rc.record_every = 0;

  InterventionReport report;
  report.mode = mode;
  report.objective = objective;

  const Outcome baseline = run_beba(g, y0, params, rc).outcome;
  report.baseline_kind = baseline.kind;
  report.baseline_value = baseline.mean;
  const OutcomeKind required = objective == InterventionObjective::ConsensusValue
                                   ? OutcomeKind::Consensus
                                   : OutcomeKind::Polarized;
  if (baseline.kind != required) {
    throw PreconditionError("baseline outcome is " + std::string(to_string(baseline.kind)) +
                            " but the " + std::string(to_string(objective)) + " objective needs " +
                            std::string(to_string(required)));
  }

  // Candidate edits in ascending (u, v) order.
  std::vector<Graph> edited;
  std::vector<Edge> edits;
  const std::size_t n = g.node_count();
  if (mode == InterventionMode::Add) {
    const std::size_t absent = n * (n - 1) / 2 - g.edge_count();
    if (absent > max_candidates) {
      throw PreconditionError(std::to_string(absent) + " candidate edges exceed the budget of " +
                              std::to_string(max_candidates));
    }
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) {
          edits.push_back({u, v, 1.0});
          edited.push_back(add_edge(g, u, v, 1.0));
        }
      }
    }
  } else {
    if (g.edge_count() > max_candidates) {
      throw PreconditionError(std::to_string(g.edge_count()) +
                              " candidate edges exceed the budget of " + std::to_string(max_candidates));
    }
    for (const Edge& e : g.edges()) {
      EdgeRemoval removal = remove_edge(g, e.u, e.v);
      if (!removal.connected) {
        report.excluded.push_back(e);
        continue;
      }
      edits.push_back(e);
      edited.push_back(std::move(removal.graph));
    }
  }

  report.candidates.resize(edits.size());
  parallel_for(
      edits.size(),
      [&](std::size_t k) {
        const Outcome o = run_beba(edited[k], y0, params, rc).outcome;
        report.candidates[k] = InterventionCandidate{edits[k], o.mean - baseline.mean, o.mean, o.kind};
      },
      workers);

  std::stable_sort(report.candidates.begin(), report.candidates.end(),
                   [](const InterventionCandidate& a, const InterventionCandidate& b) {
                     return a.delta > b.delta;
                   });
  return report;
}

}  // namespace beba
