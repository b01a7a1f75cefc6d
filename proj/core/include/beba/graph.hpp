#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace beba {

using NodeId = std::size_t;

/// Undirected edge. Stored normalized with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId id = 0;
  double weight = 1.0;
};

/// Undirected, optionally weighted network on nodes 0..n-1.
///
/// Every node also carries a self-weight w_ii (default 1) used by the
/// averaging models. Neighbor lists are sorted by ascending id, which fixes
/// the summation order of every update rule.
///
/// Connectivity is not a construction invariant so that edits may produce
/// (and report) disconnected results; generators, loaders and analysis entry
/// points enforce it.
class Graph {
 public:
  Graph() = default;

  /// Validates and normalizes `edges`. Throws InvalidArgument on out-of-range
  /// ids, self-loops, duplicate edges, nonpositive edge weights or negative
  /// self-weights. Empty `self_weights` means all ones.
  Graph(std::size_t n, std::vector<Edge> edges, std::vector<double> self_weights = {});

  std::size_t node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges sorted by (u, v) with u < v.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(NodeId i) const { return adjacency_.at(i); }

  std::size_t degree(NodeId i) const { return adjacency_.at(i).size(); }
  /// Sum of incident edge weights (d_i).
  double weighted_degree(NodeId i) const;

  double self_weight(NodeId i) const { return self_weights_.at(i); }
  const std::vector<double>& self_weights() const noexcept { return self_weights_; }

  bool has_edge(NodeId i, NodeId j) const { return edge_weight(i, j).has_value(); }
  std::optional<double> edge_weight(NodeId i, NodeId j) const;

  bool is_connected() const;
  bool is_weighted() const;

  /// Copy with every w_ii replaced.
  Graph with_self_weights(std::vector<double> self_weights) const;
  Graph with_uniform_self_weight(double w) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.self_weights_ == b.self_weights_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> self_weights_;
};

/// Throws PreconditionError naming `context` when `g` is empty or disconnected.
void require_connected(const Graph& g, std::string_view context);

// Small deterministic graphs.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Node 0 is the center, nodes 1..leaves the leaves.
Graph star_graph(std::size_t leaves);
/// Nodes 0..a-1 on one side, a..a+b-1 on the other.
Graph complete_bipartite(std::size_t a, std::size_t b);

/// Zachary's karate club (34 nodes, 78 edges), 0-indexed.
Graph karate();

// Random generators. Each resamples from the same stream until the sample
// is connected, giving up after kGenerationAttempts samples.
inline constexpr int kGenerationAttempts = 1000;

/// G(n, rho): every pair is an edge independently with probability rho.
Graph generate_er(std::size_t n, double rho, std::uint64_t seed);

/// Watts-Strogatz with rewiring probability 1: a ring lattice with K/2
/// neighbors per side whose edges are all rewired to uniform non-loop,
/// non-duplicate endpoints. K must be even with 2 <= K < n.
Graph generate_ws(std::size_t n, std::size_t k, std::uint64_t seed);

/// Barabasi-Albert preferential attachment from a complete seed graph on
/// `m0` nodes; each arrival attaches `m` distinct edges with probability
/// proportional to current degree. Requires 1 <= m <= m0 < n.
Graph generate_ba(std::size_t n, std::size_t m0, std::size_t m, std::uint64_t seed);

// Edge-list text format: one "u v" or "u v w" per line, '#' comments.
Graph parse_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& path);
/// Writes `header` lines (each prefixed "# ") then one line per edge sorted by
/// (u, v); the weight column is omitted when it is exactly 1.
void write_edge_list(std::ostream& out, const Graph& g, std::span<const std::string_view> header = {});
void save_edge_list(const std::filesystem::path& path, const Graph& g,
                    std::span<const std::string_view> header = {});

/// Copy of `g` with edge (i, j) added. Throws InvalidArgument if it exists.
Graph add_edge(const Graph& g, NodeId i, NodeId j, double weight = 1.0);

struct EdgeRemoval {
  Graph graph;
  bool connected = true;
};

/// Copy of `g` with edge (i, j) removed, flagged when the result is
/// disconnected. Throws InvalidArgument if the edge is absent.
EdgeRemoval remove_edge(const Graph& g, NodeId i, NodeId j);

/// Relabels node i as perm[i]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const NodeId> perm);

}  // namespace beba
