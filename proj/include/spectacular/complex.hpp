#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spectacular/graph.hpp"

namespace spectacular {

/// Embedded polygon: a cyclic sequence of distinct vertices, stored in
/// canonical form (lexicographically least over all rotations of both
/// orientations).  A polygon and its reversal are the same 2-cell.
class Polygon {
public:
  explicit Polygon(std::vector<int> cycle) : cycle_(canonical(std::move(cycle))) {}

  int perimeter() const { return static_cast<int>(cycle_.size()); }
  const std::vector<int>& vertices() const { return cycle_; }

  int vertex(int i) const {
    int l = perimeter();
    return cycle_[((i % l) + l) % l];
  }

  bool contains_vertex(int v) const {
    return std::find(cycle_.begin(), cycle_.end(), v) != cycle_.end();
  }

  /// Boundary edges normalized as (min,max), sorted.
  std::vector<std::pair<int, int>> edge_set() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(cycle_.size());
    for (size_t i = 0; i < cycle_.size(); ++i) {
      int u = cycle_[i], v = cycle_[(i + 1) % cycle_.size()];
      es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    return es;
  }

  auto operator<=>(const Polygon&) const = default;

private:
  static std::vector<int> canonical(std::vector<int> c) {
    if (c.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    std::set<int> distinct(c.begin(), c.end());
    if (distinct.size() != c.size()) throw std::invalid_argument("polygon vertices must be distinct");
    std::vector<int> best = c;
    std::vector<int> cur = c;
    for (int dir = 0; dir < 2; ++dir) {
      for (size_t r = 0; r < cur.size(); ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
      }
      std::reverse(cur.begin(), cur.end());
    }
    return best;
  }

  std::vector<int> cycle_;
};

/// Finite 2-complex: simplicial 1-skeleton plus embedded polygons.
class TwoComplex {
public:
  TwoComplex() = default;

  TwoComplex(SimpleGraph graph, std::vector<Polygon> polygons)
      : graph_(std::move(graph)), polygons_(std::move(polygons)) {
    std::sort(polygons_.begin(), polygons_.end());
    for (size_t i = 1; i < polygons_.size(); ++i)
      if (polygons_[i] == polygons_[i - 1]) throw std::invalid_argument("duplicate polygon");
    for (const Polygon& p : polygons_)
      for (int i = 0; i < p.perimeter(); ++i)
        if (!graph_.has_edge(p.vertex(i), p.vertex(i + 1)))
          throw std::invalid_argument("polygon edge missing from 1-skeleton");
  }

  const SimpleGraph& graph() const { return graph_; }
  const std::vector<Polygon>& polygons() const { return polygons_; }
  int polygon_count() const { return static_cast<int>(polygons_.size()); }

  long euler_characteristic() const {
    return static_cast<long>(graph_.vertex_count()) - graph_.edge_count() + polygon_count();
  }

  bool operator==(const TwoComplex& o) const {
    return graph_ == o.graph_ && polygons_ == o.polygons_;
  }

private:
  SimpleGraph graph_;
  std::vector<Polygon> polygons_;
};

/// Components of the boundary intersection of two distinct polygons, each a
/// maximal shared path given as a vertex sequence (single shared vertices
/// appear as length-1 sequences).  Paths run from their smaller endpoint.
inline std::vector<std::vector<int>> boundary_pieces(const Polygon& p, const Polygon& q) {
  if (p == q) throw std::invalid_argument("boundary_pieces requires distinct polygons");
  std::vector<int> pv = p.vertices(), qv = q.vertices();
  std::sort(pv.begin(), pv.end());
  std::sort(qv.begin(), qv.end());
  std::vector<int> shared_vertices;
  std::set_intersection(pv.begin(), pv.end(), qv.begin(), qv.end(), std::back_inserter(shared_vertices));

  std::vector<std::pair<int, int>> pe = p.edge_set(), qe = q.edge_set();
  std::vector<std::pair<int, int>> shared_edges;
  std::set_intersection(pe.begin(), pe.end(), qe.begin(), qe.end(), std::back_inserter(shared_edges));

  std::map<int, std::vector<int>> adj;
  for (int v : shared_vertices) adj[v];
  for (auto [u, v] : shared_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  std::vector<std::vector<int>> components;
  std::set<int> visited;
  for (int s : shared_vertices) {
    if (visited.count(s)) continue;
    // collect the component of s
    std::vector<int> comp{s};
    visited.insert(s);
    for (size_t i = 0; i < comp.size(); ++i)
      for (int w : adj[comp[i]])
        if (!visited.count(w)) {
          visited.insert(w);
          comp.push_back(w);
        }
    // each component is a simple path inside both boundary cycles
    std::vector<int> endpoints;
    for (int v : comp)
      if (adj[v].size() <= 1) endpoints.push_back(v);
    if (endpoints.empty()) throw std::logic_error("cyclic boundary intersection of distinct polygons");
    int start = *std::min_element(endpoints.begin(), endpoints.end());
    std::vector<int> path{start};
    int prev = -1, cur = start;
    while (true) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) {
          next = w;
          break;
        }
      if (next < 0) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    components.push_back(std::move(path));
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

/// Subdivide every edge into m >= 2 parts.  Original vertex IDs are kept;
/// new vertices are allocated in sorted edge order, running from the lower
/// edge endpoint to the higher.
inline TwoComplex subdivide_edges(const TwoComplex& c, int m) {
  if (m < 2) throw std::invalid_argument("subdivision factor must be >= 2");
  const SimpleGraph& g = c.graph();
  int base = g.vertex_count();
  auto inner_vertex = [&](int edge_idx, int k) { return base + edge_idx * (m - 1) + k; };

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(g.edge_count()) * m);
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges()[i];
    int prev = u;
    for (int k = 0; k < m - 1; ++k) {
      edges.emplace_back(prev, inner_vertex(i, k));
      prev = inner_vertex(i, k);
    }
    edges.emplace_back(prev, v);
  }
  SimpleGraph sg(base + g.edge_count() * (m - 1), std::move(edges));

  std::vector<Polygon> polys;
  polys.reserve(c.polygons().size());
  for (const Polygon& p : c.polygons()) {
    std::vector<int> cycle;
    cycle.reserve(static_cast<size_t>(p.perimeter()) * m);
    for (int i = 0; i < p.perimeter(); ++i) {
      int a = p.vertex(i), b = p.vertex(i + 1);
      int idx = g.edge_index(a, b);
      cycle.push_back(a);
      if (a < b)
        for (int k = 0; k < m - 1; ++k) cycle.push_back(inner_vertex(idx, k));
      else
        for (int k = m - 2; k >= 0; --k) cycle.push_back(inner_vertex(idx, k));
    }
    polys.emplace_back(std::move(cycle));
  }
  return TwoComplex(std::move(sg), std::move(polys));
}

/// Cone every polygon off its boundary: one new vertex per polygon, l_P
/// triangles per polygon.  The result is a simplicial 2-complex presented
/// as a TwoComplex whose polygons are all triangles; it is homeomorphic to
/// the input, so homology is unchanged.
inline TwoComplex conical_subdivision(const TwoComplex& c) {
  const SimpleGraph& g = c.graph();
  std::vector<std::pair<int, int>> edges = g.edges();
  std::vector<Polygon> triangles;
  int cone = g.vertex_count();
  for (const Polygon& p : c.polygons()) {
    for (int v : p.vertices()) edges.emplace_back(v, cone);
    for (int i = 0; i < p.perimeter(); ++i)
      triangles.push_back(Polygon({p.vertex(i), p.vertex(i + 1), cone}));
    ++cone;
  }
  return TwoComplex(SimpleGraph(cone, std::move(edges)), std::move(triangles));
}

}  // namespace spectacular
