#pragma once

#include <deque>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spectacular/labeled.hpp"

namespace spectacular {

/// Fiber product of two labelled graphs: vertices are pairs (v1, v2), one
/// edge per pair of equally-labelled directed edges.  Reduced paths here
/// are exactly the words readable in both factors, which makes this the
/// piece-search structure.  Pair vertices incident to no matched edge are
/// omitted (they support no piece).
struct FiberProduct {
  std::vector<std::pair<int, int>> nodes;
  std::vector<std::pair<int, int>> edges;  // indices into nodes
  std::vector<bool> diagonal;              // node is of the form (v, v)

  SimpleGraph as_graph() const { return SimpleGraph(static_cast<int>(nodes.size()), edges); }
};

inline FiberProduct fiber_product(const LabeledGraph& a, const LabeledGraph& b) {
  if (!(a.labels() == b.labels())) throw std::invalid_argument("fiber product needs a shared label set");
  FiberProduct fp;
  std::unordered_map<long long, int> node_id;
  long long stride = b.graph().vertex_count();
  auto node = [&](int v1, int v2) {
    long long key = v1 * stride + v2;
    auto [it, fresh] = node_id.emplace(key, static_cast<int>(fp.nodes.size()));
    if (fresh) {
      fp.nodes.emplace_back(v1, v2);
      fp.diagonal.push_back(v1 == v2);
    }
    return it->second;
  };
  const LabelSet& ls = a.labels();
  for (int l = 0; l < ls.size(); ++l) {
    if (ls.tau(l) < l) continue;  // one direction per inverse pair
    for (auto [f1, t1] : a.occurrences(l))
      for (auto [f2, t2] : b.occurrences(l)) fp.edges.emplace_back(node(f1, f2), node(t1, t2));
  }
  return fp;
}

namespace detail {

// Farthest node from src within one component; distances via BFS.
inline std::pair<int, int> farthest(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  int best = src;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (dist[v] > dist[best]) best = v;
    for (int w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return {best, dist[best]};
}

}  // namespace detail

/// Length of the longest piece readable in both labelled graphs, where the
/// two readings come from distinct relators; nullopt means pieces of
/// unbounded length (an off-diagonal cycle in the fiber product).
/// For a relator against itself use max_piece_self.
inline std::optional<long> piece_search(const FiberProduct& fp, bool skip_diagonal) {
  int n = static_cast<int>(fp.nodes.size());
  std::vector<std::vector<int>> adj(n);
  std::vector<long> edge_count(n, 0);
  std::vector<bool> drop(n, false);
  if (skip_diagonal)
    for (int v = 0; v < n; ++v) drop[v] = fp.diagonal[v];
  for (auto [x, y] : fp.edges) {
    if (drop[x] || drop[y]) continue;
    adj[x].push_back(y);
    adj[y].push_back(x);
  }

  long best = 0;
  std::vector<int> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s] || drop[s]) continue;
    // collect component
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (int w : adj[comp[i]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    long vertices = static_cast<long>(comp.size());
    long edges = 0;
    for (int v : comp) edges += static_cast<long>(adj[v].size());
    edges /= 2;
    if (edges >= vertices) return std::nullopt;  // a cycle: words repeat forever
    // a tree component: the longest reduced path is its diameter
    auto [far, _] = detail::farthest(adj, s);
    best = std::max(best, static_cast<long>(detail::farthest(adj, far).second));
  }
  return best;
}

inline std::optional<long> max_piece_length(const LabeledGraph& a, const LabeledGraph& b) {
  return piece_search(fiber_product(a, b), false);
}

/// Pieces of a relator with itself: readings from two distinct vertices,
/// i.e. off-diagonal components of the self fiber product.
inline std::optional<long> max_piece_self(const LabeledGraph& a) {
  return piece_search(fiber_product(a, a), true);
}

}  // namespace spectacular
