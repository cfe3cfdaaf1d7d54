#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spectacular {

/// Finite simplicial graph on vertices 0..n-1: no loops, no parallel edges.
/// Edges are stored sorted as (u,v) with u < v; the edge index in this
/// ordering is stable and used for boundary matrices and labellings.
class SimpleGraph {
public:
  SimpleGraph() : n_(0) {}

  SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    for (auto& [u, v] : edges) {
      if (u == v) throw std::invalid_argument("loop edge");
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("parallel edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (size_t i = 0; i < edges_.size(); ++i) {
      adj_[edges_[i].first].push_back(edges_[i].second);
      adj_[edges_[i].second].push_back(edges_[i].first);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int valence(int v) const { return static_cast<int>(adj_.at(v).size()); }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
  }

  /// Index of edge {u,v} in the sorted edge list; throws if absent.
  int edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) throw std::invalid_argument("no such edge");
    return static_cast<int>(it - edges_.begin());
  }

  bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  /// BFS distances from src; -1 where unreachable.  An edge may be excluded.
  std::vector<int> distances(int src, std::optional<std::pair<int, int>> skip_edge = std::nullopt) const {
    std::vector<int> dist(n_, -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj_[v]) {
        if (skip_edge && ((v == skip_edge->first && w == skip_edge->second) ||
                          (v == skip_edge->second && w == skip_edge->first)))
          continue;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

  /// Shortest path src -> dst as a vertex sequence, deterministic
  /// (smallest-neighbor BFS tree); empty if unreachable.
  std::vector<int> shortest_path(int src, int dst,
                                 std::optional<std::pair<int, int>> skip_edge = std::nullopt) const {
    std::vector<int> parent(n_, -1), dist(n_, -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj_[v]) {
        if (skip_edge && ((v == skip_edge->first && w == skip_edge->second) ||
                          (v == skip_edge->second && w == skip_edge->first)))
          continue;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
    if (dist[dst] < 0) return {};
    std::vector<int> path;
    for (int v = dst; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
  }

  int component_count() const {
    std::vector<int> seen(n_, 0);
    int comps = 0;
    for (int s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      ++comps;
      std::deque<int> queue{s};
      seen[s] = 1;
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj_[v])
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
      }
    }
    return comps;
  }

private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

struct GirthResult {
  std::optional<int> girth;   // nullopt for a forest
  std::vector<int> cycle;     // witness: vertex cycle of minimal length
};

/// Exact girth: for each edge, the shortest cycle through it is 1 plus the
/// endpoint distance with the edge removed.  Deterministic witness.
inline GirthResult girth(const SimpleGraph& g) {
  GirthResult best;
  for (auto [u, v] : g.edges()) {
    std::vector<int> path = g.shortest_path(u, v, std::make_pair(u, v));
    if (path.empty()) continue;
    int len = static_cast<int>(path.size());  // cycle length = path edges + 1
    if (!best.girth || len < *best.girth) {
      best.girth = len;
      best.cycle = path;  // closing edge v->u is implicit
    }
  }
  return best;
}

struct BranchSeparationResult {
  std::optional<int> distance;  // nullopt when fewer than two branch vertices
  int from = -1, to = -1;
};

/// Minimum distance between distinct vertices of valence >= 3.
inline BranchSeparationResult branch_separation(const SimpleGraph& g) {
  std::vector<int> branch;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.valence(v) >= 3) branch.push_back(v);
  BranchSeparationResult best;
  if (branch.size() < 2) return best;
  for (size_t i = 0; i < branch.size(); ++i) {
    std::vector<int> dist = g.distances(branch[i]);
    for (size_t j = i + 1; j < branch.size(); ++j) {
      int d = dist[branch[j]];
      if (d >= 0 && (!best.distance || d < *best.distance)) {
        best.distance = d;
        best.from = branch[i];
        best.to = branch[j];
      }
    }
  }
  return best;
}

}  // namespace spectacular
