#include <cmath>
#include <string>

#include "beba/analysis.hpp"
#include "beba/error.hpp"

namespace beba {

double beta_grid_value(const BetaRange& range, double resolution, std::size_t k) noexcept {
  return range.lo + static_cast<double>(k) * resolution;
}

std::size_t beta_grid_size(const BetaRange& range, double resolution) {
  if (!(range.lo >= 0.0)) throw InvalidArgument("beta range must start at >= 0");
  if (!(range.hi > range.lo)) throw InvalidArgument("beta range must satisfy hi > lo");
  if (!(resolution > 0.0)) throw InvalidArgument("beta resolution must be positive");
  // The small slack keeps hi on the grid when (hi - lo) / res is an integer
  // up to rounding, e.g. (20 - 0) / 0.1.
  const double steps = std::floor((range.hi - range.lo) / resolution + 1e-9);
  if (steps > 1e7) throw InvalidArgument("beta grid is too fine");
  return static_cast<std::size_t>(steps) + 1;
}

namespace {

class GridProbe {
 public:
  GridProbe(const Graph& g, const OpinionVector& y0, BetaRange range, double resolution,
            const RunConfig& cfg)
      : g_(g), y0_(y0), range_(range), resolution_(resolution), cfg_(cfg),
        kinds_(beta_grid_size(range, resolution)) {
    cfg_.record_every = 0;
  }

  std::size_t size() const { return kinds_.size(); }
  double beta(std::size_t k) const { return beta_grid_value(range_, resolution_, k); }

  bool polarized(std::size_t k) {
    if (!kinds_[k]) {
      const RunResult r = run_beba(g_, y0_, BebaParams::uniform(g_.node_count(), beta(k)), cfg_);
      kinds_[k] = r.outcome.kind;
      ++runs_;
    }
    return *kinds_[k] == OutcomeKind::Polarized;
  }

  std::size_t runs() const { return runs_; }

  std::vector<std::pair<double, OutcomeKind>> samples() const {
    std::vector<std::pair<double, OutcomeKind>> out;
    for (std::size_t k = 0; k < kinds_.size(); ++k) {
      if (kinds_[k]) out.emplace_back(beta(k), *kinds_[k]);
    }
    return out;
  }

 private:
  const Graph& g_;
  const OpinionVector& y0_;
  BetaRange range_;
  double resolution_;
  RunConfig cfg_;
  std::vector<std::optional<OutcomeKind>> kinds_;
  std::size_t runs_ = 0;
};

// Index of the first polarized grid point by linear scan, or size() if none.
std::size_t scan_first_polarized(GridProbe& probe) {
  for (std::size_t k = 0; k < probe.size(); ++k) {
    if (probe.polarized(k)) return k;
  }
  return probe.size();
}

// Bisection for the first polarized index, or nullopt when the spot checks
// around the bracket contradict a monotone transition.
std::optional<std::size_t> bisect_first_polarized(GridProbe& probe) {
  std::size_t below = 0;
  std::size_t above = probe.size() - 1;
  while (above - below > 1) {
    const std::size_t mid = below + (above - below) / 2;
    if (probe.polarized(mid)) {
      above = mid;
    } else {
      below = mid;
    }
  }
  if (above + 1 < probe.size() && !probe.polarized(above + 1)) return std::nullopt;
  if (below >= 1 && probe.polarized(below - 1)) return std::nullopt;
  return above;
}

}  // namespace

BetaPResult estimate_beta_p(const Graph& g, const OpinionVector& y0, BetaRange range,
                            double resolution, const RunConfig& cfg, BetaPSearch search) {
  require_connected(g, "beta^P estimation");
  detail::validate(g, y0);
  if (y0.scale() != Scale::Signed) throw InvalidArgument("beta^P needs opinions in [-1, 1]");
  cfg.validate();

  GridProbe probe(g, y0, range, resolution, cfg);
  BetaPResult result;
  result.range = range;
  result.resolution = resolution;

  std::size_t first = probe.size();
  if (search == BetaPSearch::Scan) {
    result.scan = true;
    first = scan_first_polarized(probe);
  } else if (probe.size() == 1 || !probe.polarized(probe.size() - 1)) {
    first = probe.size() == 1 && probe.polarized(0) ? 0 : probe.size();
  } else if (probe.polarized(0)) {
    first = 0;
  } else if (auto bisected = bisect_first_polarized(probe)) {
    first = *bisected;
  } else {
    result.scan = true;
    first = scan_first_polarized(probe);
  }

  if (first < probe.size()) {
    result.first_polarized = probe.beta(first);
    if (first == 0) {
      result.polarized_at_lo = true;
      result.beta_p = range.lo;
    } else {
      result.beta_p = probe.beta(first - 1);
    }
  }
  result.runs = probe.runs();
  result.samples = probe.samples();
  return result;
}

}  // namespace beba
