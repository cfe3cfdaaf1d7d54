#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectacular/complex.hpp"
#include "spectacular/projective.hpp"
#include "spectacular/verify.hpp"

namespace spectacular {

/// Parameters for the whole pipeline: K1 from a conjugacy class of
/// PGL(2, p^e), K2 by discarding polygons missing the base vertex, then
/// edge subdivision.
struct BuildRecipe {
  int p = 2;
  int e = 3;
  int d = 7;
  int epsilon = 0;      // +1 or -1; 0 derives it from d | q+-1
  int class_index = 0;  // order-d classes sorted by least canonical element
  int base_vertex = 0;  // the point at infinity
  int subdivision = 5;  // 1 means no subdivision
};

inline int derive_epsilon(int q, int d) {
  if (d >= 3 && (q + 1) % d == 0) return 1;
  if (d >= 3 && (q - 1) % d == 0) return -1;
  throw std::invalid_argument("polygon order d must be >= 3 and divide q+1 or q-1");
}

/// Complete graph on the projective line with one d-gon per size-d orbit of
/// each inverse-pair of class elements: q(q^2-1)/2d polygons in total.
inline TwoComplex build_k1(const BuildRecipe& r) {
  Field f = Field::make(r.p, r.e);
  int q = f.q();
  int eps = derive_epsilon(q, r.d);
  if (r.epsilon != 0 && r.epsilon != eps)
    throw std::invalid_argument("epsilon does not match: d divides q" + std::string(eps > 0 ? "+1" : "-1"));
  if (r.subdivision < 1) throw std::invalid_argument("subdivision factor must be >= 1");

  std::vector<std::vector<ProjMap>> classes = order_d_classes(f, r.d);
  if (classes.empty()) throw std::invalid_argument("no element of order d in PGL(2,q)");
  if (r.class_index < 0 || r.class_index >= static_cast<int>(classes.size()))
    throw std::invalid_argument("class index out of range: " + std::to_string(classes.size()) +
                                " classes available");
  const std::vector<ProjMap>& cls = classes[r.class_index];

  int n = q + 1;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  SimpleGraph g(n, std::move(edges));

  std::vector<Polygon> polys;
  std::set<ProjMap> used;
  for (const ProjMap& x : cls) {
    if (used.count(x)) continue;
    used.insert(x);
    used.insert(inverse(f, x));
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
      if (seen[start]) continue;
      std::vector<int> orbit;
      ProjPoint pt = point_at(f, start);
      do {
        int idx = point_index(f, pt);
        seen[idx] = true;
        orbit.push_back(idx);
        pt = act(f, x, pt);
      } while (point_index(f, pt) != start);
      if (static_cast<int>(orbit.size()) == r.d)
        polys.emplace_back(std::move(orbit));
      else if (orbit.size() != 1)
        throw std::logic_error("unexpected orbit size for order-d class element");
    }
  }

  long expected = static_cast<long>(q) * (static_cast<long>(q) * q - 1) / (2 * r.d);
  if (static_cast<long>(polys.size()) != expected)
    throw std::logic_error("polygon count mismatch: got " + std::to_string(polys.size()) +
                           ", expected " + std::to_string(expected));
  return TwoComplex(std::move(g), std::move(polys));  // ctor rejects duplicates
}

struct TripleReport {
  bool ok = true;
  long incidences = 0;  // pairs (polygon, contained ordered triple)
  std::optional<std::array<int, 3>> violation;
};

/// No ordered triple (u,v,w) with edges {u,v},{v,w} inside one polygon may
/// lie in a second polygon; equivalently, two polygons never share a path
/// of two edges.
inline TripleReport check_triples(const TwoComplex& c) {
  TripleReport r;
  std::map<std::array<int, 3>, int> count;
  for (const Polygon& p : c.polygons()) {
    for (int i = 0; i < p.perimeter(); ++i) {
      int u = p.vertex(i - 1), v = p.vertex(i), w = p.vertex(i + 1);
      ++count[{u, v, w}];
      ++count[{w, v, u}];
    }
  }
  for (const auto& [triple, k] : count) {
    r.incidences += k;
    if (k > 1 && !r.violation) {
      r.ok = false;
      r.violation = triple;
    }
  }
  return r;
}

/// Keep exactly the polygons incident on the base vertex.
inline TwoComplex build_k2(const TwoComplex& k1, int v0) {
  if (v0 < 0 || v0 >= k1.graph().vertex_count()) throw std::invalid_argument("base vertex out of range");
  std::vector<Polygon> kept;
  for (const Polygon& p : k1.polygons())
    if (p.contains_vertex(v0)) kept.push_back(p);
  return TwoComplex(k1.graph(), std::move(kept));
}

struct SpectacularBuild {
  TwoComplex complex;
  ConditionReport report;
};

inline SpectacularBuild build_spectacular(const BuildRecipe& r) {
  TwoComplex k1 = build_k1(r);
  TwoComplex k2 = build_k2(k1, r.base_vertex);
  TwoComplex k = r.subdivision >= 2 ? subdivide_edges(k2, r.subdivision) : k2;
  ConditionReport report = verify_spectacular(k);
  return {std::move(k), std::move(report)};
}

}  // namespace spectacular
