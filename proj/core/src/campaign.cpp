#include <algorithm>
#include <cmath>
#include <limits>

#include "beba/analysis.hpp"
#include "beba/error.hpp"
#include "beba/parallel.hpp"

namespace beba {

namespace {

VectorRecord simulate_vector(const Graph& g, const OpinionVector& y0, std::size_t index,
                             const CampaignConfig& cfg) {
  VectorRecord rec;
  rec.index = index;
  rec.mean_y0 = mean(y0.values());
  if (cfg.betap_range) {
    rec.betap = estimate_beta_p(g, y0, *cfg.betap_range, cfg.betap_resolution, cfg.run,
                                cfg.betap_search);
  }
  rec.at_beta.reserve(cfg.betas.size());
  for (double beta : cfg.betas) {
    const Outcome o = run_beba(g, y0, BebaParams::uniform(g.node_count(), beta), cfg.run).outcome;
    rec.at_beta.push_back(SweepRow{beta, o.kind, o.variance, o.mean, o.iters});
  }
  return rec;
}

std::optional<double> correlation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() < 3) return std::nullopt;
  const double r = pearson(a, b);
  if (std::isnan(r)) return std::nullopt;
  return r;
}

void summarize(CampaignResult& result, const CampaignConfig& cfg) {
  for (std::size_t b = 0; b < cfg.betas.size(); ++b) {
    BetaSummary s;
    s.beta = cfg.betas[b];
    std::vector<double> cx, cy, px, py;
    for (const VectorRecord& rec : result.records) {
      const SweepRow& row = rec.at_beta[b];
      switch (row.kind) {
        case OutcomeKind::Consensus:
          ++s.consensus;
          cx.push_back(rec.mean_y0);
          cy.push_back(row.mean);
          break;
        case OutcomeKind::Polarized:
          ++s.polarized;
          px.push_back(rec.mean_y0);
          py.push_back(row.mean);
          break;
        case OutcomeKind::PersistentDisagreement: ++s.persistent_disagreement; break;
        case OutcomeKind::NotConverged: ++s.not_converged; break;
      }
    }
    s.consensus_correlation = correlation(cx, cy);
    s.polarized_correlation = correlation(px, py);
    result.per_beta.push_back(s);
  }

  if (cfg.betap_range) {
    std::vector<BetaPResult> all;
    all.reserve(result.records.size());
    for (const VectorRecord& rec : result.records) all.push_back(*rec.betap);
    result.betap = summarize_betap(all);
  }
}

void validate(const CampaignConfig& cfg) {
  if (cfg.num_vectors == 0) throw InvalidArgument("campaign needs at least one vector");
  if (cfg.betas.empty() && !cfg.betap_range) {
    throw InvalidArgument("campaign needs betas to simulate or a beta^P range");
  }
  cfg.run.validate();
}

}  // namespace

BetaPSummary summarize_betap(std::span<const BetaPResult> results) {
  BetaPSummary s;
  std::vector<double> values;
  for (const BetaPResult& r : results) {
    if (r.scan) ++s.scan_fallbacks;
    if (r.beta_p) {
      values.push_back(*r.beta_p);
    } else {
      ++s.no_polarization;
    }
  }
  s.finite = values.size();
  if (!values.empty()) {
    s.mean = mean(values);
    s.stddev = std::sqrt(variance(values));
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;
  }
  return s;
}

CampaignResult campaign(const Graph& g, const CampaignConfig& cfg) {
  validate(cfg);
  require_connected(g, "campaign");
  CampaignResult result;
  result.records.resize(cfg.num_vectors);
  parallel_for(
      cfg.num_vectors,
      [&](std::size_t k) {
        const OpinionVector y0 =
            sample_opinions(g.node_count(), vector_seed(cfg.seed, k), cfg.exclude_zero_band);
        result.records[k] = simulate_vector(g, y0, k, cfg);
      },
      cfg.workers);
  summarize(result, cfg);
  return result;
}

CampaignResult campaign(const GeneratorSpec& spec, const CampaignConfig& cfg) {
  if (!cfg.graph_per_vector) return campaign(generate(spec, graph_seed(cfg.seed, 0)), cfg);

  validate(cfg);
  CampaignResult result;
  result.records.resize(cfg.num_vectors);
  parallel_for(
      cfg.num_vectors,
      [&](std::size_t k) {
        const Graph g = generate(spec, graph_seed(cfg.seed, k));
        const std::size_t stream = cfg.shared_vector ? 0 : k;
        const OpinionVector y0 =
            sample_opinions(g.node_count(), vector_seed(cfg.seed, stream), cfg.exclude_zero_band);
        result.records[k] = simulate_vector(g, y0, k, cfg);
      },
      cfg.workers);
  summarize(result, cfg);
  return result;
}

}  // namespace beba
