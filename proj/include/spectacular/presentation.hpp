#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spectacular/complex.hpp"
#include "spectacular/labeled.hpp"
#include "spectacular/pieces.hpp"

namespace spectacular {

struct RelatorProvenance {
  enum class Kind { polygon_boundary, one_skeleton };
  Kind kind = Kind::polygon_boundary;
  int degree = 1;
  int polygon = -1;  // polygon index for polygon_boundary relators
};

struct Relator {
  LabeledGraph graph;
  RelatorProvenance provenance;
  int girth = 0;  // length of the shortest relator cycle
};

/// A finite family of graphical relators over a shared label alphabet.
/// Word-problem routines refuse to run until the C'(1/6) status has been
/// established, either exhaustively or by the closed-form certificate.
class GraphicalPresentation {
public:
  enum class C16 { unchecked, verified, certified };

  GraphicalPresentation(std::shared_ptr<const LabelSet> labels, std::vector<Relator> relators,
                        std::optional<int> base_girth = std::nullopt,
                        std::vector<int> perimeters = {})
      : labels_(std::move(labels)), relators_(std::move(relators)),
        base_girth_(base_girth), perimeters_(std::move(perimeters)) {
    for (const Relator& r : relators_) {
      if (!(r.graph.labels() == *labels_))
        throw std::invalid_argument("relator uses a foreign label set");
      if (!r.graph.is_reduced()) throw std::invalid_argument("relator labelling is not reduced");
    }
  }

  const LabelSet& labels() const { return *labels_; }
  const std::shared_ptr<const LabelSet>& labels_ptr() const { return labels_; }
  const std::vector<Relator>& relators() const { return relators_; }
  std::optional<int> base_girth() const { return base_girth_; }
  const std::vector<int>& perimeters() const { return perimeters_; }

  C16 c16_status() const { return c16_; }
  void set_c16_status(C16 s) { c16_ = s; }

private:
  std::shared_ptr<const LabelSet> labels_;
  std::vector<Relator> relators_;
  std::optional<int> base_girth_;
  std::vector<int> perimeters_;
  C16 c16_ = C16::unchecked;
};

/// The boundary cycle of polygon p as a labelled graph over the directed
/// edges of the ambient 1-skeleton, on its own compact vertex set.
inline LabeledGraph boundary_relator(const LabeledGraph& tautological, const Polygon& p) {
  int l = p.perimeter();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(l);
  for (int i = 0; i < l; ++i) edges.emplace_back(i, (i + 1) % l);
  SimpleGraph cycle(l, std::move(edges));
  std::vector<int> forward(l);
  const LabelSet& ls = tautological.labels();
  for (int i = 0; i < l; ++i) {
    int along = tautological.label(p.vertex(i), p.vertex(i + 1));  // direction i -> i+1
    int a = i, b = (i + 1) % l;
    forward[cycle.edge_index(a, b)] = a < b ? along : ls.tau(along);
  }
  return LabeledGraph(std::move(cycle), tautological.labels_ptr(), std::move(forward));
}

inline int relator_girth(const LabeledGraph& lg) {
  GirthResult g = girth(lg.graph());
  if (!g.girth) throw std::logic_error("relator graph has no cycle");
  return *g.girth;
}

/// Graphical presentation of the group H(S) truncated to a finite degree
/// window: one relator per (degree n in window minus s, polygon P) built on
/// the polygon boundary, and one relator per n in s built on the whole
/// 1-skeleton.
inline GraphicalPresentation materialize_hs(const TwoComplex& k, const std::set<int>& z_window,
                                            const std::set<int>& s) {
  if (z_window.count(0)) throw std::invalid_argument("degree window must not contain 0");
  for (int n : s)
    if (!z_window.count(n)) throw std::invalid_argument("S must be a subset of the window");

  LabeledGraph taut = tautological_labelling(k.graph());
  if (!taut.is_reduced())
    throw std::invalid_argument("1-skeleton has a valence < 2 vertex; tautological labelling not reduced");

  std::vector<Relator> relators;
  for (int n : z_window) {
    if (s.count(n)) {
      Relator r{degree_subdivision(taut, n),
                {RelatorProvenance::Kind::one_skeleton, n, -1},
                0};
      r.girth = relator_girth(r.graph);
      relators.push_back(std::move(r));
    } else {
      for (int pi = 0; pi < k.polygon_count(); ++pi) {
        Relator r{degree_subdivision(boundary_relator(taut, k.polygons()[pi]), n),
                  {RelatorProvenance::Kind::polygon_boundary, n, pi},
                  0};
        r.girth = relator_girth(r.graph);
        relators.push_back(std::move(r));
      }
    }
  }

  std::vector<int> perimeters;
  for (const Polygon& p : k.polygons()) perimeters.push_back(p.perimeter());
  GirthResult g = girth(k.graph());
  return GraphicalPresentation(taut.labels_ptr(), std::move(relators),
                               g.girth, std::move(perimeters));
}

struct PiecePair {
  int i = 0, j = 0;                 // relator indices, i <= j
  std::optional<long> piece;        // nullopt: unbounded
  int min_girth = 0;                // smaller girth of the two relators
  bool ok = false;                  // piece finite and 6*piece < min_girth
};

struct C16Report {
  bool pass = true;
  long pairs_checked = 0;
  PiecePair worst;                   // largest 6*piece/girth ratio found
  std::vector<PiecePair> violations;
};

/// Exhaustive graphical C'(1/6) check over every unordered relator pair,
/// self-pairs included: each piece must be strictly shorter than one sixth
/// of the girth of every relator it is readable in.
inline C16Report check_c16(const GraphicalPresentation& p) {
  C16Report report;
  const auto& rs = p.relators();
  auto consider = [&](PiecePair entry) {
    entry.ok = entry.piece.has_value() && 6 * *entry.piece < entry.min_girth;
    ++report.pairs_checked;
    if (!entry.ok) {
      report.pass = false;
      report.violations.push_back(entry);
    }
    auto ratio = [](const PiecePair& e) {
      if (!e.piece) return 1e9;
      return static_cast<double>(6 * *e.piece) / e.min_girth;
    };
    if (report.pairs_checked == 1 || ratio(entry) > ratio(report.worst)) report.worst = entry;
  };
  for (size_t i = 0; i < rs.size(); ++i) {
    consider({static_cast<int>(i), static_cast<int>(i), max_piece_self(rs[i].graph),
              rs[i].girth, false});
    for (size_t j = i + 1; j < rs.size(); ++j)
      consider({static_cast<int>(i), static_cast<int>(j),
                max_piece_length(rs[i].graph, rs[j].graph),
                std::min(rs[i].girth, rs[j].girth), false});
  }
  return report;
}

/// Closed-form small cancellation certificate for the entire infinite
/// relator family over any degree set, not just a finite window:
///   (i)   cross-degree pieces have length <= 2|m| and the shortest relator
///         cycle at degree m has length >= g|m|, so 12 < g is needed;
///   (ii)  a subdivision shares with itself only runs of length |m|-1;
///   (iii) same-degree pieces between distinct polygon boundaries scale
///         boundary overlaps by |m|, so 6*overlap < min perimeter must
///         hold in the base complex.
/// Validity is therefore exactly: girth >= 13 plus base condition 6.
struct C16Certificate {
  bool valid = false;
  int girth = 0;
  bool cross_degree_ok = false;   // (i)  g >= 13, perimeters > 12 implied
  bool self_ok = false;           // (ii) holds whenever g >= 6
  bool polygon_pairs_ok = false;  // (iii) base condition 6
  std::string detail;
};

inline C16Certificate certify_c16_family(const TwoComplex& k) {
  if (k.polygon_count() == 0) throw std::invalid_argument("certificate needs a 2-dimensional complex");
  GirthResult g = girth(k.graph());
  if (!g.girth) throw std::invalid_argument("certificate needs a 1-skeleton with cycles");

  C16Certificate cert;
  cert.girth = *g.girth;
  cert.cross_degree_ok = cert.girth >= 13;
  cert.self_ok = cert.girth >= 6;  // 6(|m|-1) < g|m| for all m iff g >= 6
  cert.polygon_pairs_ok = true;
  std::ostringstream detail;
  for (size_t i = 0; i < k.polygons().size() && cert.polygon_pairs_ok; ++i)
    for (size_t j = i + 1; j < k.polygons().size() && cert.polygon_pairs_ok; ++j) {
      int lp = k.polygons()[i].perimeter(), lq = k.polygons()[j].perimeter();
      for (const std::vector<int>& comp : boundary_pieces(k.polygons()[i], k.polygons()[j])) {
        int edges = static_cast<int>(comp.size()) - 1;
        if (6 * edges >= std::min(lp, lq)) {
          cert.polygon_pairs_ok = false;
          detail << "polygons " << i << "," << j << " share " << edges << " edges vs perimeters "
                 << lp << "," << lq << "; ";
          break;
        }
      }
    }
  if (!cert.cross_degree_ok)
    detail << "cross-degree bound needs girth > 12, have " << cert.girth << "; ";
  cert.valid = cert.cross_degree_ok && cert.self_ok && cert.polygon_pairs_ok;
  cert.detail = detail.str();
  return cert;
}

}  // namespace spectacular
