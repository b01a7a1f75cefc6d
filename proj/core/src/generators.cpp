#include <algorithm>
#include <set>
#include <string>

#include "beba/error.hpp"
#include "beba/graph.hpp"
#include "beba/rng.hpp"

namespace beba {

namespace {

Graph from_adjacency(const std::vector<std::set<NodeId>>& adj) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < adj.size(); ++u) {
    for (NodeId v : adj[u]) {
      if (u < v) edges.push_back({u, v});
    }
  }
  return Graph(adj.size(), std::move(edges));
}

[[noreturn]] void budget_exhausted(const std::string& model) {
  throw GenerationError(model + ": no connected sample after " +
                        std::to_string(kGenerationAttempts) + " attempts");
}

}  // namespace

Graph generate_er(std::size_t n, double rho, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("ER: n must be at least 2");
  if (!(rho >= 0.0 && rho <= 1.0)) throw InvalidArgument("ER: rho must lie in [0, 1]");

  Rng rng(seed);
  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) {
        if (rng.uniform() < rho) edges.push_back({i, j});
      }
    }
    Graph g(n, std::move(edges));
    if (g.is_connected()) return g;
  }
  budget_exhausted("ER");
}

Graph generate_ws(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n < 3) throw InvalidArgument("WS: n must be at least 3");
  if (k % 2 != 0) throw InvalidArgument("WS: K must be even");
  if (k < 2 || k >= n) throw InvalidArgument("WS: K must satisfy 2 <= K < n");

  Rng rng(seed);
  const std::size_t half = k / 2;
  std::vector<NodeId> candidates;
  candidates.reserve(n);

  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    std::vector<std::set<NodeId>> adj(n);
    for (NodeId u = 0; u < n; ++u) {
      for (std::size_t step = 1; step <= half; ++step) {
        const NodeId v = (u + step) % n;
        adj[u].insert(v);
        adj[v].insert(u);
      }
    }
    // Probability-1 rewiring: every lattice edge (u, u+step) moves its far
    // endpoint to a uniform node that is neither u nor already adjacent to u.
    for (std::size_t step = 1; step <= half; ++step) {
      for (NodeId u = 0; u < n; ++u) {
        const NodeId v = (u + step) % n;
        if (!adj[u].contains(v)) continue;
        candidates.clear();
        for (NodeId w = 0; w < n; ++w) {
          if (w != u && !adj[u].contains(w)) candidates.push_back(w);
        }
        if (candidates.empty()) continue;
        const NodeId w = candidates[rng.below(candidates.size())];
        adj[u].erase(v);
        adj[v].erase(u);
        adj[u].insert(w);
        adj[w].insert(u);
      }
    }
    Graph g = from_adjacency(adj);
    if (g.is_connected()) return g;
  }
  budget_exhausted("WS");
}

Graph generate_ba(std::size_t n, std::size_t m0, std::size_t m, std::uint64_t seed) {
  if (!(1 <= m && m <= m0 && m0 < n)) {
    throw InvalidArgument("BA: parameters must satisfy 1 <= M <= M0 < n");
  }

  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<std::size_t> degree(n, 0);
  for (NodeId i = 0; i < m0; ++i) {
    for (NodeId j = i + 1; j < m0; ++j) {
      edges.push_back({i, j});
      ++degree[i];
      ++degree[j];
    }
  }

  std::vector<char> chosen(n, 0);
  std::vector<NodeId> targets;
  for (NodeId arrival = m0; arrival < n; ++arrival) {
    targets.clear();
    for (std::size_t pick = 0; pick < m; ++pick) {
      std::size_t total = 0;
      for (NodeId i = 0; i < arrival; ++i) {
        if (!chosen[i]) total += degree[i];
      }
      NodeId target = 0;
      if (total == 0) {
        // Only reachable with a single isolated seed node: attach uniformly.
        std::size_t r = rng.below(arrival - targets.size());
        for (NodeId i = 0; i < arrival; ++i) {
          if (chosen[i]) continue;
          if (r == 0) {
            target = i;
            break;
          }
          --r;
        }
      } else {
        std::size_t r = rng.below(total);
        for (NodeId i = 0; i < arrival; ++i) {
          if (chosen[i]) continue;
          if (r < degree[i]) {
            target = i;
            break;
          }
          r -= degree[i];
        }
      }
      chosen[target] = 1;
      targets.push_back(target);
    }
    for (NodeId t : targets) {
      chosen[t] = 0;
      edges.push_back({t, arrival});
      ++degree[t];
      ++degree[arrival];
    }
  }

  Graph g(n, std::move(edges));
  if (!g.is_connected()) budget_exhausted("BA");
  return g;
}

}  // namespace beba
