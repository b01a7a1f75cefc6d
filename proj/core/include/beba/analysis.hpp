#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "beba/dynamics.hpp"
#include "beba/graph.hpp"
#include "beba/models.hpp"

namespace beba {

// ---------------------------------------------------------------------------
// Single agent in a fixed environment

/// Predicted limit of a single agent facing one fixed neighbor with opinion p.
///
/// For p <= 0:
///   p == 0 or beta < -1/p          -> p
///   beta >= -1/p, y0 < -1/(beta p) -> p
///   beta >= -1/p, y0 > -1/(beta p) -> sgn(y0)
///   beta >= -1/p, y0 = -1/(beta p) -> y0 (unstable equilibrium)
/// p > 0 is handled by mirroring both p and y0. The self-weight does not
/// enter the prediction.
double theorem1_predict(double p, double beta, double y0, double self_weight = 1.0);

// ---------------------------------------------------------------------------
// Sufficient conditions on general networks

struct ThresholdPair {
  /// Uniform beta below 1 / max|y0|^2 guarantees consensus.
  double consensus_bound = 0.0;
  /// Uniform beta above 1 / min|y0|^2 guarantees polarization.
  double polarization_bound = 0.0;
};

/// Throws PreconditionError if y0 is empty or any |y0_i| is 0 or 1.
ThresholdPair theorem2_thresholds(std::span<const double> y0);

// ---------------------------------------------------------------------------
// Polarization threshold beta^P

struct BetaRange {
  double lo = 0.0;
  double hi = 20.0;
};

enum class BetaPSearch { Bisection, Scan };

/// Result of searching the grid {lo, lo + res, ..., hi} for the
/// consensus-to-polarization transition.
///
/// `beta_p` follows the convention "polarized for every tested beta above
/// beta_p": it is the last grid value that does not polarize, and
/// `first_polarized = beta_p + resolution` is the first one that does. Both
/// are absent when hi itself does not polarize (no polarization in range).
/// When lo already polarizes, beta_p is lo and `polarized_at_lo` is set.
struct BetaPResult {
  std::optional<double> beta_p;
  std::optional<double> first_polarized;
  double resolution = 0.1;
  BetaRange range;
  bool polarized_at_lo = false;
  /// True when the answer came from a linear scan (requested, or the
  /// bisection bracket failed its monotonicity spot checks).
  bool scan = false;
  std::size_t runs = 0;
  /// Every simulated (beta, kind) pair in ascending beta.
  std::vector<std::pair<double, OutcomeKind>> samples;

  bool no_polarization() const noexcept { return !first_polarized.has_value(); }
};

/// Grid value lo + k * resolution (computed directly, not accumulated).
double beta_grid_value(const BetaRange& range, double resolution, std::size_t k) noexcept;
std::size_t beta_grid_size(const BetaRange& range, double resolution);

/// Finds beta^P for (g, y0) with uniform beta and the graph's self-weights.
/// Bisection assumes a monotone consensus -> polarized transition, then
/// spot-checks the grid points on either side of the bracket and falls back
/// to a full scan if they disagree with monotonicity.
BetaPResult estimate_beta_p(const Graph& g, const OpinionVector& y0, BetaRange range,
                            double resolution, const RunConfig& cfg = {},
                            BetaPSearch search = BetaPSearch::Bisection);

// ---------------------------------------------------------------------------
// Sweeps and sampling

struct SweepRow {
  double beta = 0.0;
  OutcomeKind kind = OutcomeKind::NotConverged;
  double variance = 0.0;
  double mean = 0.0;
  std::size_t iters = 0;

  std::optional<double> consensus_value() const {
    return kind == OutcomeKind::Consensus ? std::optional<double>(mean) : std::nullopt;
  }
  std::optional<double> mean_polarized_opinion() const {
    return kind == OutcomeKind::Polarized ? std::optional<double>(mean) : std::nullopt;
  }
};

/// One independent run per beta from the same y0. Rows follow `betas` order.
/// `workers` as in parallel_for.
std::vector<SweepRow> beta_sweep(const Graph& g, const OpinionVector& y0,
                                 std::span<const double> betas, const RunConfig& cfg = {},
                                 std::size_t workers = 1);

/// n i.i.d. uniform opinions on [-1, 1]. With `exclude_zero_band` = eta,
/// coordinates with |y| < eta are redrawn.
OpinionVector sample_opinions(std::size_t n, std::uint64_t seed,
                              std::optional<double> exclude_zero_band = std::nullopt);

double pearson(std::span<const double> a, std::span<const double> b);

// ---------------------------------------------------------------------------
// Star-graph comparison of BOF and BEBA

struct StarRow {
  double x1 = 0.0;
  double x_neighbors = 0.0;
  double x1_next_bof = 0.0;
  double x1_next_beba = 0.0;
};

/// Center of a 5-node star (w_11 = 1) with four leaves at a common opinion.
/// `grid_points` >= 2 samples [0, 1] evenly; each row gives the center's
/// next opinion under BOF (bias b_1) and BEBA (entrenchment beta_1, computed
/// on y = 2x - 1 and mapped back). Without `x1` the center opinion is swept
/// over the same grid too.
std::vector<StarRow> star_comparison(double beta_1, double bias_1, std::optional<double> x1,
                                     std::size_t grid_points);

// ---------------------------------------------------------------------------
// Single-edge interventions

enum class InterventionMode { Add, Delete };
enum class InterventionObjective { ConsensusValue, MeanPolarized };

std::string_view to_string(InterventionMode mode) noexcept;
std::string_view to_string(InterventionObjective objective) noexcept;

struct InterventionCandidate {
  Edge edge;
  /// objective(edited) - objective(baseline), where objective is the mean of
  /// the final vector (y* under consensus, mean polarized opinion otherwise).
  double delta = 0.0;
  double value = 0.0;
  OutcomeKind kind = OutcomeKind::NotConverged;
};

struct InterventionReport {
  InterventionMode mode = InterventionMode::Add;
  InterventionObjective objective = InterventionObjective::ConsensusValue;
  OutcomeKind baseline_kind = OutcomeKind::NotConverged;
  double baseline_value = 0.0;
  /// Sorted by delta descending, ties by (u, v) ascending.
  std::vector<InterventionCandidate> candidates;
  /// Delete mode: edges whose removal disconnects the graph.
  std::vector<Edge> excluded;
};

inline constexpr std::size_t kDefaultInterventionBudget = 100000;

/// Exhaustive single-edge what-if analysis, re-running BEBA from y0 for every
/// absent pair (Add) or every non-bridge edge (Delete).
/// Throws PreconditionError when the baseline outcome does not match the
/// objective (Consensus for ConsensusValue, Polarized for MeanPolarized) or
/// the candidate count exceeds `max_candidates`.
InterventionReport edge_intervention(const Graph& g, const OpinionVector& y0,
                                     const BebaParams& params, InterventionMode mode,
                                     InterventionObjective objective, const RunConfig& cfg = {},
                                     std::size_t max_candidates = kDefaultInterventionBudget,
                                     std::size_t workers = 1);

// ---------------------------------------------------------------------------
// Monte Carlo campaigns

struct ErSpec { std::size_t n; double rho; };
struct WsSpec { std::size_t n; std::size_t k; };
struct BaSpec { std::size_t n; std::size_t m0; std::size_t m; };
using GeneratorSpec = std::variant<ErSpec, WsSpec, BaSpec>;

Graph generate(const GeneratorSpec& spec, std::uint64_t seed);

struct CampaignConfig {
  std::size_t num_vectors = 100;
  std::uint64_t seed = 0;
  /// Betas at which every vector is simulated (consensus value / mean
  /// polarized opinion records).
  std::vector<double> betas;
  /// When set, beta^P is estimated for every vector.
  std::optional<BetaRange> betap_range;
  double betap_resolution = 0.1;
  BetaPSearch betap_search = BetaPSearch::Bisection;
  std::optional<double> exclude_zero_band;
  /// With a generator spec: draw a fresh graph per vector instead of one
  /// shared graph.
  bool graph_per_vector = false;
  /// With graph_per_vector: reuse vector 0 on every graph (edge-placement
  /// studies) instead of drawing a new vector per graph.
  bool shared_vector = false;
  RunConfig run{.record_every = 0};
  /// 0 = BEBA_THREADS / hardware concurrency.
  std::size_t workers = 0;
};

struct VectorRecord {
  std::size_t index = 0;
  double mean_y0 = 0.0;
  std::optional<BetaPResult> betap;
  std::vector<SweepRow> at_beta;  // one per CampaignConfig::betas entry
};

struct BetaSummary {
  double beta = 0.0;
  std::size_t consensus = 0;
  std::size_t polarized = 0;
  std::size_t persistent_disagreement = 0;
  std::size_t not_converged = 0;
  /// Pearson r between mean(y0) and the consensus value over consensus runs.
  std::optional<double> consensus_correlation;
  /// Pearson r between mean(y0) and the mean polarized opinion over
  /// polarized runs.
  std::optional<double> polarized_correlation;
};

struct BetaPSummary {
  std::size_t finite = 0;
  std::size_t no_polarization = 0;
  std::size_t scan_fallbacks = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population
  double min = 0.0;
  double max = 0.0;
};

struct CampaignResult {
  std::vector<VectorRecord> records;
  std::vector<BetaSummary> per_beta;
  std::optional<BetaPSummary> betap;
};

/// Reproducible per seed and independent of worker count: vector k is drawn
/// from substream (seed, k) and records are stored by index.
CampaignResult campaign(const Graph& g, const CampaignConfig& cfg);
CampaignResult campaign(const GeneratorSpec& spec, const CampaignConfig& cfg);

/// Summary statistics over a set of beta^P results.
BetaPSummary summarize_betap(std::span<const BetaPResult> results);

/// Seed used for the opinion vector with index k of a batch seeded by `seed`.
std::uint64_t vector_seed(std::uint64_t seed, std::size_t k) noexcept;
/// Seed used for the graph drawn by a campaign over a generator spec.
std::uint64_t graph_seed(std::uint64_t seed, std::size_t k) noexcept;

}  // namespace beba
