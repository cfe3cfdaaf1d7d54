#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spectacular/complex.hpp"
#include "spectacular/homology.hpp"

namespace spectacular {

struct ConditionCheck {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string witness;  // failure detail, empty on pass
};

/// Verdict of the seven defining conditions, plus the preamble requirement
/// (id 0) that the complex actually has 2-cells.
struct ConditionReport {
  std::vector<ConditionCheck> checks;
  bool spectacular = false;
  std::optional<int> girth;
  std::optional<int> branch_separation;
  HomologyReport homology;

  const ConditionCheck& condition(int id) const {
    for (const ConditionCheck& c : checks)
      if (c.id == id) return c;
    throw std::out_of_range("no such condition");
  }
};

namespace detail {

inline std::string join_vertices(const std::vector<int>& vs) {
  std::ostringstream os;
  for (size_t i = 0; i < vs.size(); ++i) os << (i ? "-" : "") << vs[i];
  return os.str();
}

}  // namespace detail

inline ConditionReport verify_spectacular(const TwoComplex& c) {
  ConditionReport r;
  const SimpleGraph& g = c.graph();

  r.checks.push_back({0, "two-dimensional (has at least one polygon)", c.polygon_count() > 0,
                      c.polygon_count() > 0 ? "" : "complex has no polygons"});

  // SimpleGraph cannot represent loops or parallel edges, so this holds by
  // construction; re-stated so the report is self-contained.
  r.checks.push_back({1, "1-skeleton is a simplicial graph", true, ""});

  {
    bool ok = true;
    std::string witness;
    for (size_t i = 0; i < c.polygons().size() && ok; ++i) {
      const Polygon& p = c.polygons()[i];
      std::vector<int> vs = p.vertices();
      std::sort(vs.begin(), vs.end());
      if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
        ok = false;
        witness = "polygon " + std::to_string(i) + " repeats a vertex";
      }
      for (int k = 0; k < p.perimeter() && ok; ++k)
        if (!g.has_edge(p.vertex(k), p.vertex(k + 1))) {
          ok = false;
          witness = "polygon " + std::to_string(i) + " uses a missing edge";
        }
    }
    r.checks.push_back({2, "polygon boundaries embed in the 1-skeleton", ok, witness});
  }

  {
    BranchSeparationResult bs = branch_separation(g);
    r.branch_separation = bs.distance;
    bool ok = !bs.distance || *bs.distance >= 5;
    std::string witness;
    if (!ok)
      witness = "branch vertices " + std::to_string(bs.from) + " and " + std::to_string(bs.to) +
                " at distance " + std::to_string(*bs.distance);
    r.checks.push_back({3, "branch vertices are at distance >= 5", ok, witness});
  }

  GirthResult gr = girth(g);
  r.girth = gr.girth;
  {
    bool ok = !gr.girth || *gr.girth >= 13;
    std::string witness;
    if (!ok)
      witness = "cycle of length " + std::to_string(*gr.girth) + ": " + detail::join_vertices(gr.cycle);
    r.checks.push_back({4, "girth is at least 13", ok, witness});
  }

  {
    bool ok = true;
    std::string witness;
    if (gr.girth) {
      for (size_t i = 0; i < c.polygons().size() && ok; ++i) {
        int l = c.polygons()[i].perimeter();
        if (l <= 2 * *gr.girth) {
          ok = false;
          witness = "polygon " + std::to_string(i) + " has perimeter " + std::to_string(l) +
                    " <= 2*girth = " + std::to_string(2 * *gr.girth);
        }
      }
    }
    r.checks.push_back({5, "every perimeter exceeds twice the girth", ok, witness});
  }

  {
    bool ok = true;
    std::string witness;
    for (size_t i = 0; i < c.polygons().size() && ok; ++i)
      for (size_t j = i + 1; j < c.polygons().size() && ok; ++j) {
        int lp = c.polygons()[i].perimeter();
        int lq = c.polygons()[j].perimeter();
        for (const std::vector<int>& comp : boundary_pieces(c.polygons()[i], c.polygons()[j])) {
          int edges = static_cast<int>(comp.size()) - 1;
          if (6 * edges >= std::min(lp, lq)) {
            ok = false;
            witness = "polygons " + std::to_string(i) + "," + std::to_string(j) +
                      " share a path of " + std::to_string(edges) +
                      " edges: " + detail::join_vertices(comp);
            break;
          }
        }
      }
    r.checks.push_back({6, "boundary overlaps satisfy C'(1/6)", ok, witness});
  }

  {
    r.homology = homology(c);
    bool ok = r.homology.acyclic();
    std::string witness;
    if (!ok) {
      std::ostringstream os;
      os << "betti (" << r.homology.b0 << "," << r.homology.b1 << "," << r.homology.b2 << ")";
      if (!r.homology.torsion_h1.empty()) {
        os << ", H1 torsion";
        for (const Int& d : r.homology.torsion_h1) os << " " << d;
      }
      witness = os.str();
    }
    r.checks.push_back({7, "integrally acyclic", ok, witness});
  }

  r.spectacular = true;
  for (const ConditionCheck& ck : r.checks) r.spectacular = r.spectacular && ck.pass;
  return r;
}

}  // namespace spectacular
