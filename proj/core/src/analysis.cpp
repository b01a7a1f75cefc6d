#include "beba/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "beba/error.hpp"
#include "beba/parallel.hpp"
#include "beba/rng.hpp"

namespace beba {

double theorem1_predict(double p, double beta, double y0, [[maybe_unused]] double self_weight) {
  if (!(p >= -1.0 && p <= 1.0)) throw InvalidArgument("fixed opinion p must lie in [-1, 1]");
  if (!(y0 >= -1.0 && y0 <= 1.0)) throw InvalidArgument("initial opinion must lie in [-1, 1]");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw InvalidArgument("entrenchment must be >= 0");

  if (p > 0.0) return -theorem1_predict(-p, beta, -y0, self_weight);
  if (p == 0.0 || beta < -1.0 / p) return p;

  const double repelling = -1.0 / (beta * p);
  if (y0 < repelling) return p;
  if (y0 > repelling) return sgn(y0);
  return y0;
}

ThresholdPair theorem2_thresholds(std::span<const double> y0) {
  if (y0.empty()) throw PreconditionError("threshold pair needs a non-empty opinion vector");
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = 0; i < y0.size(); ++i) {
    const double a = std::abs(y0[i]);
    if (!(a > 0.0 && a < 1.0)) {
      throw PreconditionError("opinion of node " + std::to_string(i) +
                              " must lie in (-1, 0) or (0, 1) for the threshold pair");
    }
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  return ThresholdPair{1.0 / (hi * hi), 1.0 / (lo * lo)};
}

std::vector<SweepRow> beta_sweep(const Graph& g, const OpinionVector& y0,
                                 std::span<const double> betas, const RunConfig& cfg,
                                 std::size_t workers) {
  if (betas.empty()) throw InvalidArgument("beta sweep needs at least one beta");
  require_connected(g, "beta sweep");
  RunConfig rc = cfg;
  rc.record_every = 0;
  std::vector<SweepRow> rows(betas.size());
  parallel_for(
      betas.size(),
      [&](std::size_t k) {
        const RunResult r = run_beba(g, y0, BebaParams::uniform(g.node_count(), betas[k]), rc);
        rows[k] = SweepRow{betas[k], r.outcome.kind, r.outcome.variance, r.outcome.mean, r.outcome.iters};
      },
      workers);
  return rows;
}

OpinionVector sample_opinions(std::size_t n, std::uint64_t seed,
                              std::optional<double> exclude_zero_band) {
  if (n == 0) throw InvalidArgument("opinion vector must have at least one node");
  const double eta = exclude_zero_band.value_or(0.0);
  if (!(eta >= 0.0 && eta < 1.0)) throw InvalidArgument("zero band must lie in [0, 1)");
  Rng rng(seed);
  std::vector<double> values(n);
  for (double& v : values) {
    do {
      v = rng.uniform(-1.0, 1.0);
    } while (std::abs(v) < eta);
  }
  return OpinionVector(std::move(values), Scale::Signed);
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidArgument("pearson: length mismatch");
  if (a.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double ma = mean(a);
  const double mb = mean(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sab / std::sqrt(saa * sbb);
}

std::vector<StarRow> star_comparison(double beta_1, double bias_1, std::optional<double> x1,
                                     std::size_t grid_points) {
  if (grid_points < 2) throw InvalidArgument("star comparison grid needs at least 2 points");
  if (x1 && !(*x1 >= 0.0 && *x1 <= 1.0)) throw InvalidArgument("x1 must lie in [0, 1]");
  if (!(beta_1 >= 0.0) || !(bias_1 >= 0.0)) {
    throw InvalidArgument("entrenchment and bias must be >= 0");
  }

  const Graph star = star_graph(4);
  const BofParams bof{{bias_1, 0.0, 0.0, 0.0, 0.0}};
  const BebaParams beba{{beta_1, 0.0, 0.0, 0.0, 0.0}};
  const double denom = static_cast<double>(grid_points - 1);

  std::vector<double> centers;
  if (x1) {
    centers.push_back(*x1);
  } else {
    for (std::size_t k = 0; k < grid_points; ++k) centers.push_back(static_cast<double>(k) / denom);
  }

  std::vector<StarRow> rows;
  rows.reserve(centers.size() * grid_points);
  for (double center : centers) {
    for (std::size_t k = 0; k < grid_points; ++k) {
      const double leaf = static_cast<double>(k) / denom;
      const OpinionVector x({center, leaf, leaf, leaf, leaf}, Scale::Unit);
      const double next_bof = bof_step(star, x, bof)[0];
      const double next_beba = to_unit(beba_step(star, x.rescaled(Scale::Signed), beba)[0]);
      rows.push_back({center, leaf, next_bof, next_beba});
    }
  }
  return rows;
}

Graph generate(const GeneratorSpec& spec, std::uint64_t seed) {
  struct Visitor {
    std::uint64_t seed;
    Graph operator()(const ErSpec& s) const { return generate_er(s.n, s.rho, seed); }
    Graph operator()(const WsSpec& s) const { return generate_ws(s.n, s.k, seed); }
    Graph operator()(const BaSpec& s) const { return generate_ba(s.n, s.m0, s.m, seed); }
  };
  return std::visit(Visitor{seed}, spec);
}

std::uint64_t vector_seed(std::uint64_t seed, std::size_t k) noexcept {
  return derive_seed(seed, k);
}

std::uint64_t graph_seed(std::uint64_t seed, std::size_t k) noexcept {
  return derive_seed(derive_seed(seed, 0x6772617068ULL), k);
}

}  // namespace beba
