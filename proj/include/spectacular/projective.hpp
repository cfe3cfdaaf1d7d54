#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "spectacular/gf.hpp"

namespace spectacular {

/// Point of the projective line P^1(F_q) in canonical form:
/// (x : 1) for affine points, (1 : 0) for the point at infinity.
struct ProjPoint {
  int x, y;
  auto operator<=>(const ProjPoint&) const = default;
};

/// Element of PGL(2,q): an invertible 2x2 matrix [[a,b],[c,d]] stored
/// row-major and scalar-normalized so the first nonzero entry in scan
/// order a,b,c,d equals 1.  Canonical forms are in bijection with the
/// group elements, so plain equality is group-element equality.
struct ProjMap {
  std::array<int, 4> m;
  auto operator<=>(const ProjMap&) const = default;
};

inline ProjPoint infinity_point() { return {1, 0}; }
inline ProjPoint affine_point(int x) { return {x, 1}; }

inline ProjPoint normalize(const Field& f, int x, int y) {
  if (x == 0 && y == 0) throw std::invalid_argument("(0:0) is not a projective point");
  if (y != 0) return {f.mul(x, f.inv(y)), 1};
  return {1, 0};
}

/// All q+1 points: infinity first, then affine points by element code.
/// The position of a point in this sequence is its vertex ID downstream.
inline std::vector<ProjPoint> proj_line(const Field& f) {
  std::vector<ProjPoint> pts;
  pts.reserve(f.q() + 1);
  pts.push_back(infinity_point());
  for (int x = 0; x < f.q(); ++x) pts.push_back(affine_point(x));
  return pts;
}

inline int point_index(const Field& f, const ProjPoint& pt) {
  if (pt.y == 0) return 0;
  (void)f;
  return 1 + pt.x;
}

inline ProjPoint point_at(const Field& f, int index) {
  if (index < 0 || index > f.q()) throw std::out_of_range("point index");
  return index == 0 ? infinity_point() : affine_point(index - 1);
}

inline ProjMap canon_map(const Field& f, std::array<int, 4> m) {
  int det = f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2]));
  if (det == 0) throw std::invalid_argument("projective map must have nonzero determinant");
  for (int i = 0; i < 4; ++i) {
    if (m[i] != 0) {
      int s = f.inv(m[i]);
      for (int j = 0; j < 4; ++j) m[j] = f.mul(m[j], s);
      break;
    }
  }
  return {m};
}

inline ProjMap identity_map() { return {{1, 0, 0, 1}}; }

inline ProjMap compose(const Field& f, const ProjMap& a, const ProjMap& b) {
  std::array<int, 4> r;
  r[0] = f.add(f.mul(a.m[0], b.m[0]), f.mul(a.m[1], b.m[2]));
  r[1] = f.add(f.mul(a.m[0], b.m[1]), f.mul(a.m[1], b.m[3]));
  r[2] = f.add(f.mul(a.m[2], b.m[0]), f.mul(a.m[3], b.m[2]));
  r[3] = f.add(f.mul(a.m[2], b.m[1]), f.mul(a.m[3], b.m[3]));
  return canon_map(f, r);
}

inline ProjMap inverse(const Field& f, const ProjMap& a) {
  return canon_map(f, {a.m[3], f.neg(a.m[1]), f.neg(a.m[2]), a.m[0]});
}

/// Moebius action via matrix-vector product on homogeneous coordinates.
inline ProjPoint act(const Field& f, const ProjMap& m, const ProjPoint& pt) {
  int nx = f.add(f.mul(m.m[0], pt.x), f.mul(m.m[1], pt.y));
  int ny = f.add(f.mul(m.m[2], pt.x), f.mul(m.m[3], pt.y));
  return normalize(f, nx, ny);
}

/// All q(q^2-1) canonical elements in lexicographic scan order.
inline std::vector<ProjMap> pgl_elements(const Field& f) {
  long q = f.q();
  long order = q * (q * q - 1);
  if (order > 1000000) throw std::invalid_argument("PGL enumeration budget exceeded");
  std::vector<ProjMap> out;
  out.reserve(order);
  // canonical forms: a == 1 (b,c,d free), or a == 0, b == 1 (c,d free);
  // a == b == 0 forces det == 0.
  for (int b = 0; b < q; ++b)
    for (int c = 0; c < q; ++c)
      for (int d = 0; d < q; ++d) {
        if (f.sub(d, f.mul(b, c)) == 0) continue;
        out.push_back({{1, b, c, d}});
      }
  for (int c = 1; c < q; ++c)
    for (int d = 0; d < q; ++d) out.push_back({{0, 1, c, d}});
  std::sort(out.begin(), out.end());
  return out;
}

inline int element_order(const Field& f, const ProjMap& m) {
  ProjMap x = m;
  int k = 1;
  while (!(x == identity_map())) {
    x = compose(f, x, m);
    ++k;
  }
  return k;
}

/// Conjugacy class by brute-force conjugation, sorted canonically.
/// Requires an element of order d >= 3 with d | q+1 or d | q-1.
inline std::vector<ProjMap> conjugacy_class(const Field& f, const ProjMap& m) {
  if (m == identity_map()) return {identity_map()};
  int d = element_order(f, m);
  if (d < 3 || ((f.q() + 1) % d != 0 && (f.q() - 1) % d != 0))
    throw std::invalid_argument("element order must be >= 3 and divide q+1 or q-1");
  std::set<ProjMap> cls;
  for (const ProjMap& h : pgl_elements(f)) cls.insert(compose(f, compose(f, h, m), inverse(f, h)));
  return {cls.begin(), cls.end()};
}

/// Multiset of orbit sizes of <m> acting on the projective line, ascending.
inline std::vector<int> cycle_structure(const Field& f, const ProjMap& m) {
  std::vector<ProjPoint> pts = proj_line(f);
  std::vector<bool> seen(pts.size(), false);
  std::vector<int> sizes;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    ProjPoint p = pts[i];
    do {
      seen[point_index(f, p)] = true;
      p = act(f, m, p);
      ++len;
    } while (!(p == pts[i]));
    sizes.push_back(len);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Conjugacy classes of order-d elements, each sorted, listed by their
/// least member.  The class index used by build recipes refers to this
/// ordering.
inline std::vector<std::vector<ProjMap>> order_d_classes(const Field& f, int d) {
  std::vector<std::vector<ProjMap>> classes;
  std::set<ProjMap> assigned;
  for (const ProjMap& m : pgl_elements(f)) {
    if (assigned.count(m)) continue;
    if (element_order(f, m) != d) continue;
    std::vector<ProjMap> cls = conjugacy_class(f, m);
    assigned.insert(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

}  // namespace spectacular
