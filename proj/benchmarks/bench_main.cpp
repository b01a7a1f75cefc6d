#include <benchmark/benchmark.h>

#include "beba/analysis.hpp"
#include "beba/dynamics.hpp"
#include "beba/graph.hpp"
#include "beba/models.hpp"

namespace {

using namespace beba;

Graph bench_graph(std::size_t n) {
  return generate(BaSpec{n, 4, 3}, 17);
}

void BM_BebaStep(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  OpinionVector y = sample_opinions(g.node_count(), 3);
  const BebaParams p = BebaParams::uniform(g.node_count(), 2.0);
  for (auto _ : state) {
    y = beba_step(g, y, p);
    benchmark::DoNotOptimize(y);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.edge_count()));
}
BENCHMARK(BM_BebaStep)->Arg(100)->Arg(1000)->Arg(10000);

void BM_DegrootStep(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  OpinionVector x = sample_opinions(g.node_count(), 3);
  for (auto _ : state) {
    x = degroot_step(g, x);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_DegrootStep)->Arg(1000);

void BM_BofStep(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<std::size_t>(state.range(0)));
  std::vector<double> unit = sample_opinions(g.node_count(), 3).vector();
  for (double& v : unit) v = to_unit(v);
  OpinionVector x(std::move(unit), Scale::Unit);
  const BofParams p = BofParams::uniform(g.node_count(), 1.5);
  for (auto _ : state) {
    x = bof_step(g, x, p);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_BofStep)->Arg(1000);

void BM_RunBebaKarate(benchmark::State& state) {
  const Graph g = karate();
  const OpinionVector y0 = sample_opinions(g.node_count(), 5);
  const BebaParams p = BebaParams::uniform(g.node_count(), static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_beba(g, y0, p));
}
BENCHMARK(BM_RunBebaKarate)->Arg(1)->Arg(3)->Arg(8);

void BM_EstimateBetaP(benchmark::State& state) {
  const Graph g = karate();
  const OpinionVector y0 = sample_opinions(g.node_count(), 5);
  const auto search = state.range(0) == 0 ? BetaPSearch::Bisection : BetaPSearch::Scan;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_beta_p(g, y0, BetaRange{0.0, 20.0}, 0.1, {}, search));
}
BENCHMARK(BM_EstimateBetaP)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
