// Acceptance suite: one PASS/FAIL line per criterion.
//
//   beba_acceptance            run all criteria
//   beba_acceptance 4 7        run the listed criteria only
//
// Exit status is 0 only when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "beba/analysis.hpp"
#include "beba/error.hpp"
#include "beba/rng.hpp"
#include "cli.hpp"

namespace {

using namespace beba;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v, int precision = 4) {
  std::ostringstream s;
  s.precision(precision);
  s << v;
  return s.str();
}

OpinionVector signed_vec(std::vector<double> v) { return OpinionVector(std::move(v), Scale::Signed); }

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// 1. Single-neighbor limit oracle grid and the exact unstable equilibrium.

constexpr double kSingleNeighborTol = 1e-6;
constexpr double kSingleNeighborSeconds = 10.0;

Verdict theorem1_suite() {
  const auto start = std::chrono::steady_clock::now();
  RunConfig cfg;
  cfg.max_iters = 1000000;
  cfg.conv_tol = 1e-13;
  cfg.record_every = 0;
  std::size_t cases = 0, failures = 0;
  double worst = 0.0;
  for (int pi = 1; pi <= 9; ++pi) {
    const double p = -0.1 * pi;
    const double inv = 1.0 / std::abs(p);
    for (double beta : {0.5, 0.75 * inv, 1.25 * inv, 2.0 * inv, 10.0}) {
      for (int yi = -9; yi <= 9; ++yi) {
        const double y0 = 0.1 * yi;
        if (beta >= inv && std::abs(y0 + 1.0 / (beta * p)) < 1e-9) continue;
        const double got = run_fixed_env(y0, FixedEnvironment({p}, 1.0, beta), cfg).limit;
        const double err = std::abs(got - theorem1_predict(p, beta, y0));
        worst = std::max(worst, err);
        if (err > kSingleNeighborTol) ++failures;
        ++cases;
      }
    }
  }

  const FixedEnvironment exact({-0.5}, 1.0, 4.0);
  double y = 0.5;
  bool bitwise = true;
  for (int t = 0; t < 1000; ++t) {
    y = fixed_env_step(y, exact);
    bitwise = bitwise && y == 0.5;
  }
  const double secs = elapsed_seconds(start);
  return {failures == 0 && bitwise && secs < kSingleNeighborSeconds,
          std::to_string(cases) + " grid cases, max error " + fmt(worst) + ", case 2c bitwise " +
              (bitwise ? "yes" : "no") + ", " + fmt(secs, 3) + " s"};
}

// ---------------------------------------------------------------------------
// 2. Sufficient polarization/consensus conditions on random ER graphs.

constexpr double kSufficientClassTol = 1e-6;
constexpr double kSufficientSeconds = 60.0;

Verdict theorem2_suite() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(20240602);
  std::size_t pol_ok = 0, con_ok = 0;
  const std::size_t graphs = 50;
  for (std::size_t k = 0; k < graphs; ++k) {
    const std::size_t n = 8 + rng.below(13);  // 8..20
    const Graph g = generate_er(n, 0.35, derive_seed(77, k));
    std::vector<double> y(n);
    for (double& v : y) v = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.05, 0.95);
    const ThresholdPair th = theorem2_thresholds(y);
    double max_abs = 0.0;
    for (double v : y) max_abs = std::max(max_abs, std::abs(v));

    RunConfig cfg;
    cfg.record_every = 0;
    const Outcome pol = run_beba(g, signed_vec(y), BebaParams::uniform(n, 1.01 * th.polarization_bound), cfg).outcome;
    const bool extreme = std::all_of(pol.final_opinions.begin(), pol.final_opinions.end(),
                                     [](double v) { return std::abs(v) >= 1.0 - kSufficientClassTol; });
    if (pol.kind == OutcomeKind::Polarized && extreme) ++pol_ok;

    const Outcome con = run_beba(g, signed_vec(y), BebaParams::uniform(n, 0.99 * th.consensus_bound), cfg).outcome;
    const auto [lo, hi] = std::minmax_element(con.final_opinions.begin(), con.final_opinions.end());
    if (con.kind == OutcomeKind::Consensus && *hi - *lo <= kSufficientClassTol && std::abs(con.mean) <= max_abs) {
      ++con_ok;
    }
  }
  const double secs = elapsed_seconds(start);
  return {pol_ok == graphs && con_ok == graphs && secs < kSufficientSeconds,
          "polarized " + std::to_string(pol_ok) + "/50, consensus " + std::to_string(con_ok) + "/50, " +
              fmt(secs, 3) + " s"};
}

// ---------------------------------------------------------------------------
// 3. Two-community exact behavior at beta = 3, 4, 5.

constexpr double kTwoCommunityConsensusTol = 1e-9;

Verdict corollary1_suite() {
  struct Case {
    std::string name;
    Graph g;
    std::vector<double> y0;
  };
  const std::vector<Case> cases{
      {"K3,3", complete_bipartite(3, 3), {0.5, 0.5, 0.5, -0.5, -0.5, -0.5}},
      {"edge", path_graph(2), {0.5, -0.5}},
  };
  bool ok = true;
  std::string detail;
  for (const Case& c : cases) {
    const std::size_t n = c.g.node_count();
    OpinionVector y = signed_vec(c.y0);
    bool unchanged = true;
    for (int t = 0; t < 100; ++t) {
      y = beba_step(c.g, y, BebaParams::uniform(n, 4.0));
      unchanged = unchanged && y.vector() == c.y0;
    }
    RunConfig cfg;
    cfg.record_every = 0;
    const Outcome pol = run_beba(c.g, signed_vec(c.y0), BebaParams::uniform(n, 5.0), cfg).outcome;
    bool signs = pol.kind == OutcomeKind::Polarized;
    for (std::size_t i = 0; i < n && signs; ++i) {
      signs = pol.pattern[i] == (c.y0[i] > 0 ? 1 : -1) && std::abs(pol.final_opinions[i]) >= 1.0 - 1e-6;
    }
    const Outcome con = run_beba(c.g, signed_vec(c.y0), BebaParams::uniform(n, 3.0), cfg).outcome;
    const bool zero = con.kind == OutcomeKind::Consensus && std::abs(con.mean) <= kTwoCommunityConsensusTol;
    ok = ok && unchanged && signs && zero;
    detail += c.name + ": fixed@4 " + (unchanged ? "yes" : "no") + ", polarized@5 " + (signs ? "yes" : "no") +
              ", consensus@3 |y*|=" + fmt(std::abs(con.mean), 3) + "; ";
  }
  return {ok, detail};
}

// ---------------------------------------------------------------------------
// 4. beta^P distribution on Karate.

constexpr std::size_t kBetaPVectors = 500;
constexpr double kBetaPMax = 7.0;
constexpr double kBetaPMostlyBelow = 5.0;
constexpr double kBetaPMostlyFraction = 0.6;
constexpr double kBetaPSeconds = 600.0;

Verdict karate_betap() {
  const auto start = std::chrono::steady_clock::now();
  CampaignConfig cfg;
  cfg.num_vectors = kBetaPVectors;
  cfg.seed = 2024;
  cfg.betap_range = BetaRange{0.0, 20.0};
  cfg.betap_resolution = 0.1;
  const CampaignResult r = campaign(karate(), cfg);
  std::size_t below = 0;
  for (const VectorRecord& rec : r.records) {
    if (rec.betap->beta_p && *rec.betap->beta_p < kBetaPMostlyBelow) ++below;
  }
  const BetaPSummary& s = *r.betap;
  const double frac = s.finite == 0 ? 0.0 : static_cast<double>(below) / static_cast<double>(s.finite);
  const double secs = elapsed_seconds(start);
  return {s.finite > 0 && s.max <= kBetaPMax && frac >= kBetaPMostlyFraction && secs < kBetaPSeconds,
          "finite " + std::to_string(s.finite) + "/500, max " + fmt(s.max) + ", mean " + fmt(s.mean) +
              ", below 5: " + fmt(100.0 * frac, 3) + "%, " + fmt(secs, 3) + " s"};
}

// ---------------------------------------------------------------------------
// 5. Variance transition along per-vector beta sweeps.

constexpr std::size_t kSweepVectors = 20;
constexpr std::size_t kSweepCleanRequired = 18;
constexpr double kZeroVariance = 1e-10;

Verdict variance_transition() {
  const Graph g = karate();
  const BetaRange range{0.0, 10.0};
  std::vector<double> betas;
  for (std::size_t k = 1; k < beta_grid_size(range, 0.1); ++k) betas.push_back(beta_grid_value(range, 0.1, k));
  RunConfig cfg;
  cfg.record_every = 0;
  std::size_t clean = 0;
  for (std::size_t v = 0; v < kSweepVectors; ++v) {
    const OpinionVector y0 = sample_opinions(34, vector_seed(55, v));
    const auto rows = beta_sweep(g, y0, betas, cfg, 0);
    const BetaPResult bp = estimate_beta_p(g, y0, range, 0.1, cfg);
    std::size_t transitions = 0;
    bool shaped = true;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const bool pol = rows[k].kind == OutcomeKind::Polarized;
      if (!pol && rows[k].kind != OutcomeKind::Consensus) shaped = false;
      if (pol && rows[k].variance <= kZeroVariance) shaped = false;
      if (!pol && rows[k].variance > kZeroVariance) shaped = false;
      if (k > 0 && (rows[k - 1].kind == OutcomeKind::Polarized) != pol) ++transitions;
      // The bracket from the beta^P search splits the sweep.
      if (bp.beta_p && (rows[k].beta > *bp.beta_p + 1e-9) != pol) shaped = false;
    }
    if (shaped && transitions == 1 && rows.back().kind == OutcomeKind::Polarized && !bp.scan) ++clean;
  }
  return {clean >= kSweepCleanRequired, std::to_string(clean) + "/20 vectors cleanly monotone"};
}

// ---------------------------------------------------------------------------
// 6. Less-neutral consensus as beta grows from 0.5 to 2.

constexpr double kLessNeutralFraction = 0.6;

Verdict less_neutral_consensus() {
  CampaignConfig cfg;
  cfg.num_vectors = 200;
  cfg.seed = 606;
  cfg.betas = {0.5, 2.0};
  const CampaignResult r = campaign(karate(), cfg);
  std::size_t both = 0, less_neutral = 0;
  for (const VectorRecord& rec : r.records) {
    const auto& lo = rec.at_beta[0];
    const auto& hi = rec.at_beta[1];
    if (lo.kind != OutcomeKind::Consensus || hi.kind != OutcomeKind::Consensus) continue;
    ++both;
    if (std::abs(hi.mean) >= std::abs(lo.mean)) ++less_neutral;
  }
  const double frac = both == 0 ? 0.0 : static_cast<double>(less_neutral) / static_cast<double>(both);
  return {both > 0 && frac >= kLessNeutralFraction,
          std::to_string(less_neutral) + "/" + std::to_string(both) + " = " + fmt(100.0 * frac, 3) + "%"};
}

// ---------------------------------------------------------------------------
// 7. Consensus value against the initial mean.

constexpr double kMeanCorrelation = 0.9;

Verdict mean_correlation() {
  CampaignConfig cfg;
  cfg.num_vectors = 200;
  cfg.seed = 707;
  cfg.betas = {1.0};
  const CampaignResult r = campaign(karate(), cfg);
  const BetaSummary& s = r.per_beta.front();
  const double corr = s.consensus_correlation.value_or(std::nan(""));
  return {corr >= kMeanCorrelation,
          "r = " + fmt(corr) + " over " + std::to_string(s.consensus) + " consensus runs (needs >= 0.9)"};
}

// ---------------------------------------------------------------------------
// 8. beta^P by topology on matched n = 100 graphs.

Verdict topology_contrast() {
  CampaignConfig cfg;
  cfg.num_vectors = 100;
  cfg.seed = 808;
  cfg.betap_range = BetaRange{0.0, 20.0};
  const std::uint64_t graph_seed_value = 88;
  const Graph er = generate_er(100, 0.0606, graph_seed_value);
  const Graph ws = generate_ws(100, 4, graph_seed_value);
  const Graph ba = generate_ba(100, 4, 3, graph_seed_value);
  const BetaPSummary ser = *campaign(er, cfg).betap;
  const BetaPSummary sws = *campaign(ws, cfg).betap;
  const BetaPSummary sba = *campaign(ba, cfg).betap;
  const bool means = sws.mean > ser.mean && sws.mean > sba.mean;
  const bool spread = sba.stddev > ser.stddev && sba.stddev > sws.stddev;
  return {means && spread,
          "mean ER " + fmt(ser.mean) + " WS " + fmt(sws.mean) + " BA " + fmt(sba.mean) + "; std ER " +
              fmt(ser.stddev) + " WS " + fmt(sws.stddev) + " BA " + fmt(sba.stddev) + " (WS uses K=4 for K=3)"};
}

// ---------------------------------------------------------------------------
// 9. Star-graph comparison slice.

constexpr double kStarTol = 1e-12;

Verdict star_slice() {
  const auto rows = star_comparison(1.0, 1.0, 0.0, 101);
  const double step = 1.0 / 100.0;
  bool bof_zero = true;
  const StarRow* best = &rows.front();
  for (const StarRow& r : rows) {
    bof_zero = bof_zero && r.x1_next_bof == 0.0;
    if (r.x1_next_beba > best->x1_next_beba) best = &r;
  }
  const bool peak = std::abs(best->x1_next_beba - 0.5) <= kStarTol &&
                    std::abs(best->x_neighbors - 0.75) <= step + kStarTol;
  bool clipped = true;
  for (const StarRow& r : star_comparison(2.5, 1.0, 0.25, 101)) {
    if (r.x_neighbors >= 0.95 - kStarTol) clipped = clipped && r.x1_next_beba < 0.25;
  }
  return {bof_zero && peak && clipped,
          std::string("BOF column zero ") + (bof_zero ? "yes" : "no") + ", BEBA max " + fmt(best->x1_next_beba, 17) +
              " at x_nb " + fmt(best->x_neighbors) + ", beta 2.5 slice below 0.25 " + (clipped ? "yes" : "no")};
}

// ---------------------------------------------------------------------------
// 10. Oracle equivalences.

constexpr double kBofDegrootTol = 1e-12;
constexpr double kFixedPointTol = 1e-12;

Verdict oracle_equivalences() {
  Rng rng(1010);
  RunConfig cfg;
  cfg.record_every = 0;
  std::size_t beba_ok = 0, bof_ok = 0;
  for (std::size_t k = 0; k < 50; ++k) {
    const std::size_t n = 5 + rng.below(26);
    const Graph g = generate_er(n, 0.3, derive_seed(1010, k)).with_uniform_self_weight(rng.uniform(0.0, 2.0));
    const OpinionVector y = sample_opinions(n, derive_seed(2020, k));
    const Outcome a = run_beba(g, y, BebaParams::uniform(n, 0.0), cfg).outcome;
    const Outcome b = run_degroot(g, y, cfg).outcome;
    if (a.final_opinions == b.final_opinions && a.iters == b.iters) ++beba_ok;

    const OpinionVector x = y.rescaled(Scale::Unit);
    const Outcome c = run_bof(g, x, BofParams::uniform(n, 0.0), cfg).outcome;
    const Outcome d = run_degroot(g, x, cfg).outcome;
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(c.final_opinions[i] - d.final_opinions[i]));
    if (diff <= kBofDegrootTol) ++bof_ok;
  }

  std::size_t envs = 0, roots_ok = 0, stability_checked = 0, stability_ok = 0;
  const double h = 1e-6;
  while (envs < 100) {
    std::vector<double> p(1 + rng.below(5));
    for (double& v : p) v = rng.uniform(-1.0, 1.0);
    const FixedEnvironment env(p, 1.0, rng.uniform(0.1, 10.0));
    if (std::abs(env.s()) < 1e-6) continue;
    ++envs;
    const FixedPoints fp = fixed_env_fixed_points(env);
    const double m = static_cast<double>(env.m());
    auto guard_free = [&](double y) {
      return std::abs(y) <= 1.0 - 2 * h && env.self_weight() + env.beta() * env.s() * y + m > 2 * h * env.beta() * std::abs(env.s());
    };
    auto residual = [&](double y) { return std::abs(fixed_env_step(y, env) - y); };
    // Roots outside [-1, 1] or in the guard region are not fixed points of the
    // clipped map; check those against the defining quadratic instead.
    auto root_ok = [&](double y) {
      if (guard_free(y)) return residual(y) <= kFixedPointTol;
      const double q = env.beta() * env.s() * y * y + (m - env.beta() * env.q()) * y - env.s();
      return std::abs(q) <= kFixedPointTol * std::max(1.0, y * y * env.beta() * std::abs(env.s()));
    };
    if (root_ok(fp.attracting) && (!fp.repelling || root_ok(*fp.repelling))) ++roots_ok;
    if (fp.repelling && guard_free(fp.attracting) && guard_free(*fp.repelling)) {
      ++stability_checked;
      auto deriv = [&](double y) { return (fixed_env_step(y + h, env) - fixed_env_step(y - h, env)) / (2 * h); };
      if (std::abs(deriv(fp.attracting)) < 1.0 && std::abs(deriv(*fp.repelling)) > 1.0) ++stability_ok;
    }
  }
  return {beba_ok == 50 && bof_ok == 50 && roots_ok == 100 && stability_ok == stability_checked,
          "beta=0 exact " + std::to_string(beba_ok) + "/50, b=0 " + std::to_string(bof_ok) + "/50, roots " +
              std::to_string(roots_ok) + "/100, stability " + std::to_string(stability_ok) + "/" +
              std::to_string(stability_checked)};
}

// ---------------------------------------------------------------------------
// 11. Intervention rankings against brute force on all connected 4-node graphs.

Verdict intervention_oracle() {
  const OpinionVector y0 = signed_vec({0.7, 0.2, -0.3, -0.6});
  const BebaParams params = BebaParams::uniform(4, 1.0);
  RunConfig cfg;
  cfg.record_every = 0;
  std::vector<Edge> all;
  for (NodeId u = 0; u < 4; ++u) {
    for (NodeId v = u + 1; v < 4; ++v) all.push_back({u, v, 1.0});
  }
  std::size_t graphs = 0, matched = 0;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (mask & (1u << k)) edges.push_back(all[k]);
    }
    const Graph g(4, edges);
    if (!g.is_connected()) continue;
    ++graphs;
    const double base = run_beba(g, y0, params, cfg).outcome.mean;
    bool ok = true;
    for (InterventionMode mode : {InterventionMode::Add, InterventionMode::Delete}) {
      const InterventionReport rep =
          edge_intervention(g, y0, params, mode, InterventionObjective::ConsensusValue, cfg, kDefaultInterventionBudget, 1);
      std::vector<InterventionCandidate> brute;
      std::size_t excluded = 0;
      for (const Edge& e : all) {
        const bool present = g.has_edge(e.u, e.v);
        if (mode == InterventionMode::Add && present) continue;
        if (mode == InterventionMode::Delete && !present) continue;
        Graph edited;
        if (mode == InterventionMode::Add) {
          edited = add_edge(g, e.u, e.v);
        } else {
          EdgeRemoval r = remove_edge(g, e.u, e.v);
          if (!r.connected) {
            ++excluded;
            continue;
          }
          edited = std::move(r.graph);
        }
        const Outcome o = run_beba(edited, y0, params, cfg).outcome;
        brute.push_back({e, o.mean - base, o.mean, o.kind});
      }
      std::stable_sort(brute.begin(), brute.end(), [](const auto& a, const auto& b) { return a.delta > b.delta; });
      ok = ok && rep.candidates.size() == brute.size() && rep.excluded.size() == excluded;
      for (std::size_t k = 0; ok && k < brute.size(); ++k) {
        ok = rep.candidates[k].edge == brute[k].edge && rep.candidates[k].delta == brute[k].delta &&
             rep.candidates[k].kind == brute[k].kind;
      }
    }
    if (ok) ++matched;
  }
  return {graphs == 38 && matched == graphs,
          std::to_string(matched) + "/" + std::to_string(graphs) + " connected labelled graphs match"};
}

// ---------------------------------------------------------------------------
// 12. Reproducibility of CLI outputs and thread-count independence.

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli_args(const std::vector<std::string>& args, std::string& console) {
  std::vector<const char*> argv{"beba"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  console = out.str();
  return code;
}

Verdict reproducibility() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "beba_acceptance_repro";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string two = (dir / "two.el").string();
  const std::string ops = (dir / "two.csv").string();
  std::ofstream(two) << "0 1\n";
  std::ofstream(ops) << "0,0.5\n1,-0.5\n";

  const std::vector<std::vector<std::string>> commands{
      {"generate", "--model", "ws", "--n", "60", "--k", "4", "--seed", "3", "--out", "@OUT"},
      {"simulate", "--graph", "karate", "--opinions", "uniform:42", "--beta", "1", "--trajectory", "@AUX", "--out", "@OUT"},
      {"betap", "--graph", two, "--opinions", ops, "--out", "@OUT"},
      {"betap", "--graph", "karate", "--opinions", "uniform:batch:20:4", "--histogram", "@AUX", "--out", "@OUT"},
      {"sweep", "--graph", "karate", "--opinions", "uniform:6", "--betas", "0:6:0.25", "--out", "@OUT"},
      {"intervene", "--mode", "delete", "--graph", "karate", "--opinions", "uniform:6", "--beta", "1", "--out", "@OUT"},
      {"compare", "--beta1", "1", "--bias1", "1", "--grid", "51", "--out", "@OUT"},
      {"single-agent", "--p", "-0.5", "--beta", "4", "--y0", "-0.9,-0.5,0.25,0.75", "--out", "@OUT"},
      {"campaign", "--graph", "karate", "--vectors", "30", "--seed", "12", "--betas", "1,10", "--betap-range", "0:20",
       "--records", "@AUX", "--out", "@OUT"},
  };
  std::size_t identical = 0;
  for (std::size_t c = 0; c < commands.size(); ++c) {
    std::string files[2];
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<std::string> args = commands[c];
      const std::string out = (dir / ("out" + std::to_string(rep))).string();
      const std::string aux = (dir / "aux").string();
      fs::remove(out);
      fs::remove(aux);
      for (auto& a : args) {
        if (a == "@OUT") a = out;
        if (a == "@AUX") a = aux;
      }
      std::string console;
      if (run_cli_args(args, console) != 0) {
        files[rep] = "error";
        continue;
      }
      files[rep] = slurp(out) + '\x1f' + slurp(aux);
    }
    if (files[0] != "error" && files[0] == files[1]) ++identical;
  }

  // Campaign aggregates under different worker counts.
  std::string campaign_out[2];
  const char* threads[2] = {"1", "4"};
  for (int k = 0; k < 2; ++k) {
    ::setenv("BEBA_THREADS", threads[k], 1);
    run_cli_args({"campaign", "--graph", "er:40:0.15", "--vectors", "24", "--seed", "9", "--betas", "0.5,3",
                  "--betap-range", "0:20", "--graph-per-vector"},
                 campaign_out[k]);
  }
  ::unsetenv("BEBA_THREADS");
  const bool threads_equal = !campaign_out[0].empty() && campaign_out[0] == campaign_out[1];
  fs::remove_all(dir);
  return {identical == commands.size() && threads_equal,
          std::to_string(identical) + "/" + std::to_string(commands.size()) +
              " commands byte-identical, BEBA_THREADS 1 vs 4 campaign " + (threads_equal ? "identical" : "differs")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<std::string, std::function<Verdict()>>> criteria{
      {1, {"Single-neighbor oracle suite", theorem1_suite}},
      {2, {"Sufficient conditions", theorem2_suite}},
      {3, {"Two-community exact suite", corollary1_suite}},
      {4, {"Karate beta^P distribution", karate_betap}},
      {5, {"Variance transition", variance_transition}},
      {6, {"Less-neutral consensus", less_neutral_consensus}},
      {7, {"Mean correlation at beta = 1", mean_correlation}},
      {8, {"Topology contrast", topology_contrast}},
      {9, {"Star comparison slice", star_slice}},
      {10, {"Oracle equivalences", oracle_equivalences}},
      {11, {"Intervention brute-force oracle", intervention_oracle}},
      {12, {"Reproducibility", reproducibility}},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (const auto& [id, _] : criteria) selected.push_back(id);
  }

  int failed = 0;
  for (int id : selected) {
    const auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::cout << "criterion " << id << ": unknown\n";
      ++failed;
      continue;
    }
    Verdict v;
    try {
      v = it->second.second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << id << ". " << it->second.first << ": " << v.detail << std::endl;
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
