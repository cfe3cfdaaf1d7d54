#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "spectacular/complex.hpp"
#include "spectacular/snf.hpp"

namespace spectacular {

/// Integral homology of a 2-complex in degrees 0..2.
struct HomologyReport {
  long b0 = 0, b1 = 0, b2 = 0;
  std::vector<Int> torsion_h0;  // always empty; kept for schema symmetry
  std::vector<Int> torsion_h1;
  std::vector<Int> torsion_h2;  // always empty: H2 is a kernel, hence free

  bool acyclic() const {
    return b0 == 1 && b1 == 0 && b2 == 0 && torsion_h0.empty() && torsion_h1.empty() &&
           torsion_h2.empty();
  }
};

/// Boundary maps of the cellular chain complex.  Edges are oriented from
/// lower to higher vertex ID; each polygon contributes +-1 per boundary
/// edge according to the traversal direction of its stored cycle.
inline std::pair<IntMatrix, IntMatrix> boundary_matrices(const TwoComplex& c) {
  const SimpleGraph& g = c.graph();
  IntMatrix d1(g.vertex_count(), g.edge_count());
  for (int j = 0; j < g.edge_count(); ++j) {
    auto [u, v] = g.edges()[j];
    d1(u, j) -= 1;
    d1(v, j) += 1;
  }
  IntMatrix d2(g.edge_count(), c.polygon_count());
  for (int j = 0; j < c.polygon_count(); ++j) {
    const Polygon& p = c.polygons()[j];
    for (int i = 0; i < p.perimeter(); ++i) {
      int a = p.vertex(i), b = p.vertex(i + 1);
      int e = g.edge_index(a, b);
      d2(e, j) += (a < b) ? 1 : -1;
    }
  }
  return {std::move(d1), std::move(d2)};
}

inline HomologyReport homology(const TwoComplex& c) {
  auto [d1, d2] = boundary_matrices(c);
  SmithForm s1 = smith_normal_form(d1);
  SmithForm s2 = smith_normal_form(d2);
  long V = c.graph().vertex_count();
  long E = c.graph().edge_count();
  long F = c.polygon_count();

  HomologyReport r;
  r.b0 = V - s1.rank;
  r.b1 = E - s1.rank - s2.rank;
  r.b2 = F - s2.rank;
  if (r.b1 < 0) throw std::logic_error("boundary maps do not compose to zero");
  for (const Int& d : s2.diagonal)
    if (d > 1) r.torsion_h1.push_back(d);
  return r;
}

inline bool is_acyclic(const TwoComplex& c) { return homology(c).acyclic(); }

}  // namespace spectacular
