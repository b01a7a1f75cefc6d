#include "beba/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "beba/error.hpp"

namespace beba {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<double> self_weights)
    : n_(n), edges_(std::move(edges)), adjacency_(n), self_weights_(std::move(self_weights)) {
  if (self_weights_.empty()) {
    self_weights_.assign(n_, 1.0);
  } else if (self_weights_.size() != n_) {
    throw InvalidArgument("self-weight count " + std::to_string(self_weights_.size()) +
                          " does not match node count " + std::to_string(n_));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (!(self_weights_[i] >= 0.0) || !std::isfinite(self_weights_[i])) {
      throw InvalidArgument("self-weight of node " + std::to_string(i) + " must be finite and >= 0");
    }
  }

  for (Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            ") references a node outside 0.." + std::to_string(n_ == 0 ? 0 : n_ - 1));
    }
    if (e.u == e.v) {
      throw InvalidArgument("self-loop on node " + std::to_string(e.u));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            ") must have a finite positive weight");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v) {
      throw InvalidArgument("duplicate edge (" + std::to_string(edges_[k].u) + ", " +
                            std::to_string(edges_[k].v) + ")");
    }
  }

  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.weight});
    adjacency_[e.v].push_back({e.u, e.weight});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  }
}

double Graph::weighted_degree(NodeId i) const {
  double d = 0.0;
  for (const Neighbor& nb : adjacency_.at(i)) d += nb.weight;
  return d;
}

std::optional<double> Graph::edge_weight(NodeId i, NodeId j) const {
  if (i >= n_ || j >= n_) return std::nullopt;
  const auto& list = adjacency_[i];
  auto it = std::lower_bound(list.begin(), list.end(), j,
                             [](const Neighbor& nb, NodeId id) { return nb.id < id; });
  if (it == list.end() || it->id != j) return std::nullopt;
  return it->weight;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<char> seen(n_, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : adjacency_[u]) {
      if (!seen[nb.id]) {
        seen[nb.id] = 1;
        ++reached;
        stack.push_back(nb.id);
      }
    }
  }
  return reached == n_;
}

bool Graph::is_weighted() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight != 1.0; });
}

Graph Graph::with_self_weights(std::vector<double> self_weights) const {
  return Graph(n_, edges_, std::move(self_weights));
}

Graph Graph::with_uniform_self_weight(double w) const {
  return with_self_weights(std::vector<double>(n_, w));
}

void require_connected(const Graph& g, std::string_view context) {
  if (g.node_count() == 0) {
    throw PreconditionError(std::string(context) + ": graph is empty");
  }
  if (!g.is_connected()) {
    throw PreconditionError(std::string(context) + ": graph is not connected");
  }
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph(a + b, std::move(edges));
}

Graph add_edge(const Graph& g, NodeId i, NodeId j, double weight) {
  if (i == j) throw InvalidArgument("cannot add self-loop on node " + std::to_string(i));
  if (i >= g.node_count() || j >= g.node_count()) {
    throw InvalidArgument("edge endpoint outside the graph");
  }
  if (g.has_edge(i, j)) {
    throw InvalidArgument("edge (" + std::to_string(i) + ", " + std::to_string(j) + ") already exists");
  }
  std::vector<Edge> edges = g.edges();
  edges.push_back({i, j, weight});
  return Graph(g.node_count(), std::move(edges), g.self_weights());
}

EdgeRemoval remove_edge(const Graph& g, NodeId i, NodeId j) {
  if (!g.has_edge(i, j)) {
    throw InvalidArgument("edge (" + std::to_string(i) + ", " + std::to_string(j) + ") does not exist");
  }
  const NodeId a = std::min(i, j);
  const NodeId b = std::max(i, j);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (const Edge& e : g.edges()) {
    if (e.u != a || e.v != b) edges.push_back(e);
  }
  EdgeRemoval out{Graph(g.node_count(), std::move(edges), g.self_weights()), true};
  out.connected = out.graph.is_connected();
  return out;
}

Graph relabel(const Graph& g, std::span<const NodeId> perm) {
  const std::size_t n = g.node_count();
  if (perm.size() != n) throw InvalidArgument("permutation size mismatch");
  std::vector<char> hit(n, 0);
  for (NodeId p : perm) {
    if (p >= n || hit[p]) throw InvalidArgument("not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.weight});
  std::vector<double> sw(n);
  for (NodeId i = 0; i < n; ++i) sw[perm[i]] = g.self_weight(i);
  return Graph(n, std::move(edges), std::move(sw));
}

}  // namespace beba
