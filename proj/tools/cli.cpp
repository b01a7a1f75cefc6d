#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "beba/error.hpp"
#include "beba/parallel.hpp"
#include "io.hpp"

namespace beba::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunOptions {
  std::size_t max_iters = RunConfig{}.max_iters;
  double tol = RunConfig{}.conv_tol;
  double class_tol = RunConfig{}.class_tol;
  std::optional<double> self_weight;

  RunConfig config(std::size_t record_every = 0) const {
    RunConfig cfg;
    cfg.max_iters = max_iters;
    cfg.conv_tol = tol;
    cfg.class_tol = class_tol;
    cfg.record_every = record_every;
    cfg.validate();
    return cfg;
  }

  Graph apply(Graph g) const {
    return self_weight ? g.with_uniform_self_weight(*self_weight) : g;
  }
};

void add_run_options(CLI::App* app, RunOptions& opts) {
  app->add_option("--max-iters", opts.max_iters, "Iteration cap per run")->capture_default_str();
  app->add_option("--tol", opts.tol, "Convergence tolerance on the sup-norm step")->capture_default_str();
  app->add_option("--class-tol", opts.class_tol, "Tolerance used to classify the final state")
      ->capture_default_str();
  app->add_option("--self-weight", opts.self_weight, "Uniform self-weight w_ii (default: 1)");
}

Json config_json(const RunOptions& opts) {
  return {{"max_iters", opts.max_iters},
          {"tol", opts.tol},
          {"class_tol", opts.class_tol},
          {"self_weight", opts.self_weight ? Json(*opts.self_weight) : Json(1.0)}};
}

Json tool_json() { return {{"name", kToolName}, {"version", kToolVersion}}; }

Json opinions_json(const OpinionSource& src) {
  return {{"source", src.text},
          {"seed", src.seed ? Json(*src.seed) : Json(nullptr)},
          {"batch", src.batch == 0 ? Json(nullptr) : Json(src.batch)}};
}

/// Sends `contents` to `path` when given, else to the console stream.
void emit(const std::string& path, std::string_view contents, std::ostream& out) {
  if (path.empty()) {
    out << contents;
  } else {
    write_text_file(path, contents);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::optional<double> uniform_value(const std::vector<double>& v) {
  if (!v.empty() && std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); })) {
    return v.front();
  }
  return std::nullopt;
}

Json scalar_or_array(const std::vector<double>& v) {
  if (auto u = uniform_value(v)) return *u;
  return v;
}

OpinionVector single_signed(const OpinionSource& src, const Graph& g) {
  auto all = load_opinions(src, g.node_count());
  if (all.size() != 1) throw InvalidArgument("this command takes a single opinion vector");
  return OpinionVector(std::move(all.front()), Scale::Signed);
}

BetaRange parse_range(const std::string& text) {
  const auto v = parse_colon_numbers(text, 2, "range");
  if (!(v[0] < v[1])) throw InvalidArgument("range must satisfy lo < hi");
  return BetaRange{v[0], v[1]};
}

BetaPSearch parse_search(const std::string& text) {
  if (text == "bisection") return BetaPSearch::Bisection;
  if (text == "scan") return BetaPSearch::Scan;
  throw InvalidArgument("--search must be bisection or scan");
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string model;
  std::size_t n = 0;
  std::optional<double> rho;
  std::optional<std::size_t> k, m0, m;
  std::uint64_t seed = 0;
  std::string out;
};

void cmd_generate(const GenerateArgs& a, std::ostream& out) {
  auto need = [&](const auto& opt, const char* flag) {
    if (!opt) throw InvalidArgument(a.model + " needs " + flag);
    return *opt;
  };
  Graph g;
  std::string header = a.model + " n=" + std::to_string(a.n);
  if (a.model == "er") {
    const double rho = need(a.rho, "--rho");
    g = generate_er(a.n, rho, a.seed);
    header += " rho=" + format_number(rho);
  } else if (a.model == "ws") {
    const std::size_t k = need(a.k, "--k");
    g = generate_ws(a.n, k, a.seed);
    header += " k=" + std::to_string(k);
  } else {
    const std::size_t m0 = need(a.m0, "--m0");
    const std::size_t m = need(a.m, "--m");
    g = generate_ba(a.n, m0, m, a.seed);
    header += " m0=" + std::to_string(m0) + " m=" + std::to_string(m);
  }
  header += " seed=" + std::to_string(a.seed);
  const std::string_view lines[] = {header};

  std::ostringstream text;
  write_edge_list(text, g, lines);
  if (a.out.empty()) {
    out << text.str();
    return;
  }
  write_text_file(a.out, text.str());
  out << a.model << " n=" << g.node_count() << " m=" << g.edge_count() << " -> " << a.out << '\n';
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
  std::string graph, opinions, model = "beba", beta = "0", bias = "0", out, trajectory;
  std::size_t record_every = 1;
  RunOptions run;
};

void cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const GraphSource gsrc = parse_graph_source(a.graph);
  const Graph g = a.run.apply(load_graph(gsrc));
  const OpinionSource osrc = parse_opinion_source(a.opinions);
  auto values = load_opinions(osrc, g.node_count());
  if (values.size() != 1) throw InvalidArgument("simulate takes a single opinion vector");
  const RunConfig cfg = a.run.config(a.trajectory.empty() ? 0 : a.record_every);

  Json params;
  RunResult result;
  std::string scale = "signed";
  if (a.model == "beba") {
    const BebaParams p{scalar_or_file(a.beta, g.node_count(), "beta")};
    params["beta"] = scalar_or_array(p.beta);
    result = run_beba(g, OpinionVector(std::move(values.front()), Scale::Signed), p, cfg);
  } else if (a.model == "degroot") {
    result = run_degroot(g, OpinionVector(std::move(values.front()), Scale::Signed), cfg);
  } else {
    const BofParams p{scalar_or_file(a.bias, g.node_count(), "bias")};
    params["bias"] = scalar_or_array(p.bias);
    std::vector<double> x = std::move(values.front());
    if (!osrc.path) {
      for (double& v : x) v = to_unit(v);
    }
    scale = "unit";
    result = run_bof(g, OpinionVector(std::move(x), Scale::Unit), p, cfg);
  }
  params["config"] = config_json(a.run);
  params["record_every"] = cfg.record_every;

  Json report;
  report["tool"] = tool_json();
  report["command"] = "simulate";
  report["model"] = a.model;
  report["graph"] = graph_summary(g, gsrc.text);
  Json opinions = opinions_json(osrc);
  opinions["scale"] = scale;
  report["opinions"] = std::move(opinions);
  report["params"] = std::move(params);
  report["outcome"] = to_json(result.outcome);
  report["trajectory"] = a.trajectory.empty() ? Json(nullptr) : Json(a.trajectory);

  if (!a.trajectory.empty()) {
    std::ostringstream traj;
    if (a.trajectory.ends_with(".json")) {
      traj << trajectory_json(result.trajectory).dump(2) << '\n';
    } else {
      write_trajectory_csv(traj, result.trajectory);
    }
    write_text_file(a.trajectory, traj.str());
  }
  emit(a.out, dump(report), out);
}

// ---------------------------------------------------------------------------

struct BetaPArgs {
  std::string graph, opinions, range = "0:20", search = "bisection", out, histogram;
  double resolution = 0.1;
  double bin_width = 0.5;
  RunOptions run;
};

std::string histogram_csv(const std::vector<BetaPResult>& results, BetaRange range, double width) {
  if (!(width > 0.0)) throw InvalidArgument("--bin-width must be positive");
  const auto bins = static_cast<std::size_t>(std::ceil((range.hi - range.lo) / width - 1e-9));
  std::vector<std::size_t> counts(std::max<std::size_t>(bins, 1), 0);
  for (const BetaPResult& r : results) {
    if (!r.beta_p) continue;
    auto k = static_cast<std::size_t>(std::floor((*r.beta_p - range.lo) / width + 1e-9));
    counts[std::min(k, counts.size() - 1)]++;
  }
  std::ostringstream text;
  CsvWriter csv(text);
  csv.row({"bin_lo", "bin_hi", "count"});
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double lo = range.lo + static_cast<double>(k) * width;
    csv.row({cell(lo), cell(std::min(range.hi, lo + width)), cell(counts[k])});
  }
  return text.str();
}

void cmd_betap(const BetaPArgs& a, std::ostream& out) {
  const GraphSource gsrc = parse_graph_source(a.graph);
  const Graph g = a.run.apply(load_graph(gsrc));
  const OpinionSource osrc = parse_opinion_source(a.opinions);
  const BetaRange range = parse_range(a.range);
  const BetaPSearch search = parse_search(a.search);
  const RunConfig cfg = a.run.config();
  const auto vectors = load_opinions(osrc, g.node_count());

  std::vector<BetaPResult> results(vectors.size());
  parallel_for(vectors.size(), [&](std::size_t k) {
    results[k] = estimate_beta_p(g, OpinionVector(vectors[k], Scale::Signed), range, a.resolution,
                                 cfg, search);
  });

  Json report;
  report["tool"] = tool_json();
  report["command"] = "betap";
  report["graph"] = graph_summary(g, gsrc.text);
  report["opinions"] = opinions_json(osrc);
  report["range"] = {{"lo", range.lo}, {"hi", range.hi}};
  report["resolution"] = a.resolution;
  report["search"] = a.search;
  report["config"] = config_json(a.run);
  if (results.size() == 1) {
    const Json single = to_json(results.front());
    for (const auto& [key, value] : single.items()) report[key] = value;
  } else {
    Json list = Json::array();
    for (std::size_t k = 0; k < results.size(); ++k) {
      Json item;
      item["index"] = k;
      const Json fields = to_json(results[k]);
      for (const auto& [key, value] : fields.items()) item[key] = value;
      list.push_back(std::move(item));
    }
    report["results"] = std::move(list);
    report["summary"] = to_json(summarize_betap(results));
  }
  if (!a.histogram.empty()) write_text_file(a.histogram, histogram_csv(results, range, a.bin_width));
  emit(a.out, dump(report), out);
}

// ---------------------------------------------------------------------------

struct SweepArgs {
  std::string graph, opinions, betas = "0:10:0.1", out;
  RunOptions run;
};

void cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const Graph g = a.run.apply(load_graph(parse_graph_source(a.graph)));
  const OpinionVector y0 = single_signed(parse_opinion_source(a.opinions), g);
  const auto spec = parse_colon_numbers(a.betas, 3, "--betas");
  if (!(spec[2] > 0.0) || spec[1] < spec[0]) {
    throw InvalidArgument("--betas needs lo <= hi and a positive step");
  }
  const BetaRange range{spec[0], spec[1]};
  std::vector<double> betas(beta_grid_size(range, spec[2]));
  for (std::size_t k = 0; k < betas.size(); ++k) betas[k] = beta_grid_value(range, spec[2], k);
  const auto rows = beta_sweep(g, y0, betas, a.run.config(), 0);

  std::ostringstream text;
  CsvWriter csv(text);
  csv.row({"beta", "outcome", "iters", "variance", "consensus_value", "mean_polarized_opinion"});
  for (const SweepRow& r : rows) {
    csv.row({cell(r.beta), std::string(to_string(r.kind)), cell(r.iters), cell(r.variance),
             cell(r.consensus_value()), cell(r.mean_polarized_opinion())});
  }
  emit(a.out, text.str(), out);
}

// ---------------------------------------------------------------------------

struct InterveneArgs {
  std::string graph, opinions, mode = "add", objective = "consensus", beta = "1", out;
  std::size_t max_candidates = kDefaultInterventionBudget;
  RunOptions run;
};

void cmd_intervene(const InterveneArgs& a, std::ostream& out) {
  const Graph g = a.run.apply(load_graph(parse_graph_source(a.graph)));
  const OpinionVector y0 = single_signed(parse_opinion_source(a.opinions), g);
  const BebaParams params{scalar_or_file(a.beta, g.node_count(), "beta")};
  const InterventionMode mode = a.mode == "add" ? InterventionMode::Add : InterventionMode::Delete;
  const InterventionObjective objective = a.objective == "consensus"
                                              ? InterventionObjective::ConsensusValue
                                              : InterventionObjective::MeanPolarized;
  const InterventionReport rep =
      edge_intervention(g, y0, params, mode, objective, a.run.config(), a.max_candidates, 0);

  std::ostringstream text;
  CsvWriter csv(text);
  csv.row({"kind", "rank", "u", "v", "delta", "value", "outcome"});
  csv.row({"baseline", "", "", "", cell(0.0), cell(rep.baseline_value),
           std::string(to_string(rep.baseline_kind))});
  for (std::size_t r = 0; r < rep.candidates.size(); ++r) {
    const InterventionCandidate& c = rep.candidates[r];
    csv.row({"candidate", cell(r + 1), cell(c.edge.u), cell(c.edge.v), cell(c.delta), cell(c.value),
             std::string(to_string(c.kind))});
  }
  for (const Edge& e : rep.excluded) csv.row({"excluded", "", cell(e.u), cell(e.v), "", "", ""});
  emit(a.out, text.str(), out);
}

// ---------------------------------------------------------------------------

struct CompareArgs {
  double beta1 = 1.0, bias1 = 1.0;
  std::optional<double> x1;
  std::size_t grid = 101;
  std::string out;
};

void cmd_compare(const CompareArgs& a, std::ostream& out) {
  const auto rows = star_comparison(a.beta1, a.bias1, a.x1, a.grid);
  std::ostringstream text;
  CsvWriter csv(text);
  csv.row({"x1", "x_neighbors", "x1_next_bof", "x1_next_beba"});
  for (const StarRow& r : rows) {
    csv.row({cell(r.x1), cell(r.x_neighbors), cell(r.x1_next_bof), cell(r.x1_next_beba)});
  }
  emit(a.out, text.str(), out);
}

// ---------------------------------------------------------------------------

struct SingleAgentArgs {
  std::string p, y0, out;
  double beta = 1.0, w = 1.0;
  std::size_t max_iters = RunConfig{}.max_iters;
  double tol = RunConfig{}.conv_tol;
};

void cmd_single_agent(const SingleAgentArgs& a, std::ostream& out) {
  const FixedEnvironment env(parse_number_list(a.p, "--p"), a.w, a.beta);
  const auto starts = parse_number_list(a.y0, "--y0");
  RunConfig cfg;
  cfg.max_iters = a.max_iters;
  cfg.conv_tol = a.tol;
  cfg.record_every = 0;
  cfg.validate();

  std::optional<FixedPoints> fp;
  try {
    fp = fixed_env_fixed_points(env);
  } catch (const PreconditionError&) {
  }

  std::ostringstream text;
  CsvWriter csv(text);
  csv.row({"y0", "limit", "converged", "iters", "predicted", "attracting", "repelling"});
  for (double y0 : starts) {
    if (!(y0 >= -1.0 && y0 <= 1.0)) throw InvalidArgument("--y0 values must lie in [-1, 1]");
    const FixedEnvRun run = run_fixed_env(y0, env, cfg);
    std::optional<double> predicted;
    if (env.m() == 1) predicted = theorem1_predict(env.opinions().front(), a.beta, y0, a.w);
    csv.row({cell(y0), cell(run.limit), run.converged ? "true" : "false", cell(run.iters),
             cell(predicted), fp ? cell(fp->attracting) : std::string(),
             fp ? cell(fp->repelling) : std::string()});
  }
  emit(a.out, text.str(), out);
}

// ---------------------------------------------------------------------------

struct CampaignArgs {
  std::string graph = "karate", betas, betap_range, search = "bisection", out, records;
  std::size_t vectors = 100;
  std::uint64_t seed = 0;
  double resolution = 0.1;
  std::optional<double> zero_band;
  bool graph_per_vector = false, shared_vector = false;
  RunOptions run;
};

void cmd_campaign(const CampaignArgs& a, std::ostream& out) {
  CampaignConfig cfg;
  cfg.num_vectors = a.vectors;
  cfg.seed = a.seed;
  if (!a.betas.empty()) cfg.betas = parse_number_list(a.betas, "--betas");
  if (!a.betap_range.empty()) cfg.betap_range = parse_range(a.betap_range);
  cfg.betap_resolution = a.resolution;
  cfg.betap_search = parse_search(a.search);
  cfg.exclude_zero_band = a.zero_band;
  cfg.graph_per_vector = a.graph_per_vector;
  cfg.shared_vector = a.shared_vector;
  cfg.run = a.run.config();
  cfg.workers = 0;

  const GraphSource gsrc = parse_graph_source(a.graph);
  CampaignResult result;
  Json graph;
  if (a.graph_per_vector) {
    if (!gsrc.generator || gsrc.seed || a.run.self_weight) {
      throw InvalidArgument("--graph-per-vector needs an unseeded generator spec and no --self-weight");
    }
    graph = {{"source", gsrc.text}, {"n", nullptr}, {"m", nullptr}};
    result = campaign(*gsrc.generator, cfg);
  } else {
    const Graph g = a.run.apply(load_graph(gsrc, graph_seed(a.seed, 0)));
    graph = graph_summary(g, gsrc.text);
    result = campaign(g, cfg);
  }

  Json report;
  report["tool"] = tool_json();
  report["command"] = "campaign";
  report["graph"] = std::move(graph);
  report["seed"] = a.seed;
  report["vectors"] = a.vectors;
  report["graph_per_vector"] = a.graph_per_vector;
  report["shared_vector"] = a.shared_vector;
  report["zero_band"] = a.zero_band ? Json(*a.zero_band) : Json(nullptr);
  report["config"] = config_json(a.run);
  report["betas"] = cfg.betas;
  Json per_beta = Json::array();
  for (const BetaSummary& s : result.per_beta) per_beta.push_back(to_json(s));
  report["per_beta"] = std::move(per_beta);
  if (cfg.betap_range) {
    report["betap"] = {{"range", {{"lo", cfg.betap_range->lo}, {"hi", cfg.betap_range->hi}}},
                       {"resolution", cfg.betap_resolution},
                       {"search", a.search},
                       {"summary", to_json(*result.betap)}};
  } else {
    report["betap"] = nullptr;
  }

  if (!a.records.empty()) {
    std::ostringstream text;
    CsvWriter csv(text);
    csv.row({"index", "mean_y0", "beta_p", "beta", "outcome", "iters", "variance", "mean"});
    for (const VectorRecord& rec : result.records) {
      const std::string bp = rec.betap ? cell(rec.betap->beta_p) : std::string();
      if (rec.at_beta.empty()) {
        csv.row({cell(rec.index), cell(rec.mean_y0), bp, "", "", "", "", ""});
      }
      for (const SweepRow& r : rec.at_beta) {
        csv.row({cell(rec.index), cell(rec.mean_y0), bp, cell(r.beta), std::string(to_string(r.kind)),
                 cell(r.iters), cell(r.variance), cell(r.mean)});
      }
    }
    write_text_file(a.records, text.str());
  }
  emit(a.out, dump(report), out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Opinion dynamics with biased assimilation and backfire effects", std::string(kToolName)};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Generate a random connected graph as an edge list");
  g->add_option("--model", gen.model, "Generator: er, ws or ba")
      ->required()
      ->check(CLI::IsMember({"er", "ws", "ba"}));
  g->add_option("--n", gen.n, "Number of nodes")->required();
  g->add_option("--rho", gen.rho, "ER edge probability");
  g->add_option("--k", gen.k, "WS ring degree (even)");
  g->add_option("--m0", gen.m0, "BA seed clique size");
  g->add_option("--m", gen.m, "BA edges per arriving node");
  g->add_option("--seed", gen.seed, "Random seed")->required();
  g->add_option("--out", gen.out, "Edge-list output file (default: stdout)");

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Run one opinion dynamics simulation and write a JSON report");
  s->add_option("--graph", sim.graph, "Edge-list file, karate, or generator spec er:N:RHO:SEED ...")
      ->required();
  s->add_option("--opinions", sim.opinions, "node,opinion CSV or uniform:SEED")->required();
  s->add_option("--model", sim.model, "beba, degroot or bof")
      ->check(CLI::IsMember({"beba", "degroot", "bof"}))
      ->capture_default_str();
  s->add_option("--beta", sim.beta, "Entrenchment: a number or a node,value CSV")->capture_default_str();
  s->add_option("--bias", sim.bias, "BOF bias: a number or a node,value CSV")->capture_default_str();
  s->add_option("--out", sim.out, "JSON report file (default: stdout)");
  s->add_option("--trajectory", sim.trajectory, "Trajectory file (.csv or .json)");
  s->add_option("--record-every", sim.record_every, "Snapshot interval for --trajectory")
      ->capture_default_str();
  add_run_options(s, sim.run);

  BetaPArgs bp;
  auto* b = app.add_subcommand("betap", "Estimate the polarization threshold beta^P");
  b->add_option("--graph", bp.graph, "Edge-list file, karate, or generator spec")->required();
  b->add_option("--opinions", bp.opinions, "node,opinion CSV, uniform:SEED or uniform:batch:COUNT:SEED")
      ->required();
  b->add_option("--range", bp.range, "Search range lo:hi")->capture_default_str();
  b->add_option("--resolution", bp.resolution, "Grid step")->capture_default_str();
  b->add_option("--search", bp.search, "bisection or scan")->capture_default_str();
  b->add_option("--out", bp.out, "JSON report file (default: stdout)");
  b->add_option("--histogram", bp.histogram, "Histogram CSV of finite beta^P values");
  b->add_option("--bin-width", bp.bin_width, "Histogram bin width")->capture_default_str();
  add_run_options(b, bp.run);

  SweepArgs sw;
  auto* w = app.add_subcommand("sweep", "Simulate one vector over a grid of uniform betas");
  w->add_option("--graph", sw.graph, "Edge-list file, karate, or generator spec")->required();
  w->add_option("--opinions", sw.opinions, "node,opinion CSV or uniform:SEED")->required();
  w->add_option("--betas", sw.betas, "Grid lo:hi:step")->capture_default_str();
  w->add_option("--out", sw.out, "CSV output file (default: stdout)");
  add_run_options(w, sw.run);

  InterveneArgs iv;
  auto* i = app.add_subcommand("intervene", "Rank single-edge additions or deletions by effect");
  i->add_option("--graph", iv.graph, "Edge-list file, karate, or generator spec")->required();
  i->add_option("--opinions", iv.opinions, "node,opinion CSV or uniform:SEED")->required();
  i->add_option("--mode", iv.mode, "add or delete")
      ->check(CLI::IsMember({"add", "delete"}))
      ->capture_default_str();
  i->add_option("--objective", iv.objective, "consensus or polarized-mean")
      ->check(CLI::IsMember({"consensus", "polarized-mean"}))
      ->capture_default_str();
  i->add_option("--beta", iv.beta, "Entrenchment: a number or a node,value CSV")->capture_default_str();
  i->add_option("--max-candidates", iv.max_candidates, "Refuse larger candidate sets")
      ->capture_default_str();
  i->add_option("--out", iv.out, "CSV output file (default: stdout)");
  add_run_options(i, iv.run);

  CompareArgs cp;
  auto* c = app.add_subcommand("compare", "Compare one BOF and BEBA update at the center of a star");
  c->add_option("--beta1", cp.beta1, "Center entrenchment")->capture_default_str();
  c->add_option("--bias1", cp.bias1, "Center BOF bias")->capture_default_str();
  c->add_option("--x1", cp.x1, "Center opinion in [0, 1] (default: swept over the grid)");
  c->add_option("--grid", cp.grid, "Grid points on [0, 1]")->capture_default_str();
  c->add_option("--out", cp.out, "CSV output file (default: stdout)");

  SingleAgentArgs sa;
  auto* a = app.add_subcommand("single-agent", "Iterate one agent against fixed neighbors");
  a->add_option("--p", sa.p, "Comma-separated fixed neighbor opinions")->required();
  a->add_option("--beta", sa.beta, "Entrenchment")->capture_default_str();
  a->add_option("--w", sa.w, "Self-weight")->capture_default_str();
  a->add_option("--y0", sa.y0, "Comma-separated starting opinions")->required();
  a->add_option("--max-iters", sa.max_iters, "Iteration cap")->capture_default_str();
  a->add_option("--tol", sa.tol, "Convergence tolerance")->capture_default_str();
  a->add_option("--out", sa.out, "CSV output file (default: stdout)");

  CampaignArgs cm;
  auto* m = app.add_subcommand("campaign", "Monte Carlo campaign over seeded opinion vectors");
  m->add_option("--graph", cm.graph, "karate, an edge-list file, er:N:RHO, ws:N:K or ba:N:M0:M")
      ->capture_default_str();
  m->add_option("--vectors", cm.vectors, "Number of opinion vectors")->capture_default_str();
  m->add_option("--seed", cm.seed, "Campaign seed")->required();
  m->add_option("--betas", cm.betas, "Comma-separated betas to simulate per vector");
  m->add_option("--betap-range", cm.betap_range, "Estimate beta^P per vector over lo:hi");
  m->add_option("--resolution", cm.resolution, "beta^P grid step")->capture_default_str();
  m->add_option("--search", cm.search, "bisection or scan")->capture_default_str();
  m->add_option("--zero-band", cm.zero_band, "Redraw opinions with |y| below this value");
  m->add_flag("--graph-per-vector", cm.graph_per_vector, "Draw a fresh graph for every vector");
  m->add_flag("--shared-vector", cm.shared_vector, "With --graph-per-vector, reuse one opinion vector");
  m->add_option("--out", cm.out, "JSON summary file (default: stdout)");
  m->add_option("--records", cm.records, "Per-vector CSV");
  add_run_options(m, cm.run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::map<CLI::App*, std::function<void()>> handlers = {
      {g, [&] { cmd_generate(gen, out); }},     {s, [&] { cmd_simulate(sim, out); }},
      {b, [&] { cmd_betap(bp, out); }},         {w, [&] { cmd_sweep(sw, out); }},
      {i, [&] { cmd_intervene(iv, out); }},     {c, [&] { cmd_compare(cp, out); }},
      {a, [&] { cmd_single_agent(sa, out); }},  {m, [&] { cmd_campaign(cm, out); }},
  };
  try {
    for (auto& [sub, handler] : handlers) {
      if (sub->parsed()) handler();
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace beba::cli
