#include "doctest.h"
#include "floersut/surface.hpp"

using namespace floersut;

namespace {

// Square with one boundary circle.
PolygonalComplex disk() {
  std::vector<Edge> e = {{0, 1, EdgeKind::boundary}, {1, 2, EdgeKind::boundary},
                         {2, 3, EdgeKind::boundary}, {3, 0, EdgeKind::boundary}};
  return PolygonalComplex::create(4, e, {Face{{{0, 1}, {1, 1}, {2, 1}, {3, 1}}}});
}

// Annulus: outer loop on vertex 0, inner loop on vertex 1, one spoke.
PolygonalComplex annulus() {
  std::vector<Edge> e = {{0, 0, EdgeKind::boundary}, {1, 1, EdgeKind::boundary}, {0, 1, EdgeKind::auxiliary}};
  return PolygonalComplex::create(2, e, {Face{{{0, 1}, {2, 1}, {1, -1}, {2, -1}}}});
}

// Torus with one hole: square with sides a, b identified, puncture at the corner.
PolygonalComplex punctured_torus() {
  // vertices: 0 corner, 1 puncture center; edges a, b loops at 0, spoke s, loop l at 1
  std::vector<Edge> e = {{0, 0, EdgeKind::auxiliary}, {0, 0, EdgeKind::auxiliary},
                         {0, 1, EdgeKind::auxiliary}, {1, 1, EdgeKind::boundary}};
  return PolygonalComplex::create(
      2, e, {Face{{{0, 1}, {1, 1}, {0, -1}, {1, -1}, {2, 1}, {3, 1}, {2, -1}}}});
}

}  // namespace

TEST_CASE("euler characteristic and classification") {
  auto d = disk();
  CHECK(d.euler_characteristic() == 1);
  CHECK(d.boundary_circles().size() == 1);
  auto a = annulus();
  CHECK(a.euler_characteristic() == 0);
  CHECK(a.boundary_circles().size() == 2);
  REQUIRE(a.components().size() == 1);
  CHECK(a.components()[0].genus == 0);
  auto t = punctured_torus();
  CHECK(t.euler_characteristic() == -1);
  CHECK(t.components()[0].genus == 1);
  CHECK(t.components()[0].boundary_circles == 1);
}

TEST_CASE("relative homology rel boundary") {
  CHECK(homology_pair(disk(), all_boundary_edges(disk())).free_rank == 0);
  CHECK(homology_pair(annulus(), all_boundary_edges(annulus())).free_rank == 1);
  CHECK(homology_pair(punctured_torus(), all_boundary_edges(punctured_torus())).free_rank == 2);
  CHECK(homology_pair(annulus(), {}).free_rank == 1);
}

TEST_CASE("subdivision keeps topology") {
  auto t = punctured_torus();
  auto s = t.subdivide(0).subdivide(2);
  CHECK(s.euler_characteristic() == t.euler_characteristic());
  CHECK(s.vertex_count() == t.vertex_count() + 2);
  CHECK(homology_pair(s, all_boundary_edges(s)).free_rank == 2);
  auto d1 = s.coboundary1();
  auto d0 = s.coboundary0();
  auto z = d1 * d0;
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) CHECK(z(i, j) == 0);
}

TEST_CASE("invalid complexes are rejected") {
  std::vector<Edge> e = {{0, 1, EdgeKind::auxiliary}, {1, 0, EdgeKind::auxiliary}};
  CHECK_THROWS_AS(PolygonalComplex::create(2, e, {Face{{{0, 1}, {0, 1}}}}), ComplexError);
  CHECK_THROWS_AS(PolygonalComplex::create(2, e, {Face{{{0, 1}, {1, 1}}}}), ComplexError);
  CHECK_THROWS_AS(PolygonalComplex::create(2, e, {Face{{{0, 1}, {5, 1}}}}), ComplexError);
}
