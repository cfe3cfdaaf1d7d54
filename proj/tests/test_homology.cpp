#include <catch2/catch_amalgamated.hpp>

#include "spectacular/complex.hpp"
#include "spectacular/homology.hpp"

using namespace spectacular;

namespace {

TwoComplex triangle_complex() {
  return TwoComplex(SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}}), {Polygon({0, 1, 2})});
}

// surface of a cube: 8 vertices, 12 edges, 6 squares; a 2-sphere
TwoComplex cube_surface() {
  std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6},
                                            {6, 7}, {4, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  std::vector<Polygon> faces = {Polygon({0, 1, 2, 3}), Polygon({4, 5, 6, 7}), Polygon({0, 1, 5, 4}),
                                Polygon({1, 2, 6, 5}), Polygon({2, 3, 7, 6}), Polygon({3, 0, 4, 7})};
  return TwoComplex(SimpleGraph(8, edges), std::move(faces));
}

bool is_zero(const IntMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("boundary matrices of a triangle") {
  auto [d1, d2] = boundary_matrices(triangle_complex());
  CHECK(d1.rows() == 3);
  CHECK(d1.cols() == 3);
  CHECK(d2.rows() == 3);
  CHECK(d2.cols() == 1);
  CHECK(smith_normal_form(d1).rank == 2);
  CHECK(is_zero(d1 * d2));
}

TEST_CASE("boundary of a complex without polygons has zero columns") {
  TwoComplex path(SimpleGraph(3, {{0, 1}, {1, 2}}), {});
  auto [d1, d2] = boundary_matrices(path);
  CHECK(d2.cols() == 0);
  HomologyReport r = homology(path);
  CHECK(r.acyclic());
}

TEST_CASE("homology of standard spaces") {
  SECTION("a disc is acyclic") {
    CHECK(is_acyclic(triangle_complex()));
  }
  SECTION("a sphere has b2 = 1") {
    HomologyReport r = homology(cube_surface());
    CHECK(r.b0 == 1);
    CHECK(r.b1 == 0);
    CHECK(r.b2 == 1);
    CHECK(r.torsion_h1.empty());
    CHECK_FALSE(r.acyclic());
  }
  SECTION("a bare cycle has b1 = 1") {
    TwoComplex circle(SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}}), {});
    HomologyReport r = homology(circle);
    CHECK(r.b0 == 1);
    CHECK(r.b1 == 1);
    CHECK(r.b2 == 0);
  }
  SECTION("disconnected complexes count components in b0") {
    TwoComplex two(SimpleGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}),
                   {Polygon({0, 1, 2}), Polygon({3, 4, 5})});
    CHECK(homology(two).b0 == 2);
  }
}

TEST_CASE("euler characteristic equals the alternating betti sum") {
  for (const TwoComplex& c : {triangle_complex(), cube_surface()}) {
    HomologyReport r = homology(c);
    CHECK(r.b0 - r.b1 + r.b2 == c.euler_characteristic());
  }
}

TEST_CASE("boundary maps compose to zero on every fixture") {
  for (const TwoComplex& c : {triangle_complex(), cube_surface(), subdivide_edges(cube_surface(), 3),
                              conical_subdivision(cube_surface())}) {
    auto [d1, d2] = boundary_matrices(c);
    CHECK(is_zero(d1 * d2));
  }
}

TEST_CASE("homology is invariant under both subdivisions") {
  for (const TwoComplex& c : {triangle_complex(), cube_surface()}) {
    HomologyReport base = homology(c);
    for (const TwoComplex& variant : {subdivide_edges(c, 3), conical_subdivision(c)}) {
      HomologyReport r = homology(variant);
      CHECK(r.b0 == base.b0);
      CHECK(r.b1 == base.b1);
      CHECK(r.b2 == base.b2);
      CHECK(r.torsion_h1 == base.torsion_h1);
    }
  }
}
