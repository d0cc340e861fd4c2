#include "doctest.h"
#include "floersut/homology.hpp"

#include <random>

using namespace floersut;

TEST_CASE("Y_n homology and module structure") {
  for (int n = 1; n <= 3; ++n) {
    auto y = build_yn_diagram(n);
    auto m = module_structure(y.diagram, y.omegas);
    CHECK(m.homology.total_rank() == (std::size_t{1} << n));
    CHECK(m.all_properties_hold());
    SparseGf2Map composite = SparseGf2Map::identity(m.homology.total_rank());
    for (const auto& a : m.action) composite = a * composite;
    std::vector<Gf2Vector> cols;
    for (std::size_t j = 0; j < composite.cols(); ++j) {
      Gf2Vector v(composite.rows());
      for (auto i : composite.column(j)) v.set(i);
      cols.push_back(v);
    }
    CHECK(gf2_rank(cols) == 1);
  }
}

TEST_CASE("induced maps of trivial chain maps") {
  auto y = build_yn_diagram(2);
  auto m = chain_complex(y.diagram);
  const auto n = m.generators.size();
  CHECK(induced_map(SparseGf2Map::identity(n), m.homology, m.homology) == SparseGf2Map::identity(m.homology.total_rank()));
  CHECK(induced_map(m.differential, m.homology, m.homology).is_zero());
}

TEST_CASE("trefoil grid actions vanish") {
  GridSpec g{5, {0, 1, 2, 3, 4}, {3, 4, 0, 1, 2}};
  auto gd = grid_to_diagram(g);
  auto m = module_structure(gd.diagram);
  CHECK(m.homology.total_rank() == 48);
  CHECK(m.h1_basis.empty());
}

TEST_CASE("homotopy witnesses on Y_1") {
  auto y = build_yn_diagram(1);
  auto cx = chain_complex(y.diagram);
  auto same = homotopy_witness(y.diagram, cx, y.omegas[0], y.omegas[0]);
  REQUIRE(same.witness);
  CHECK(same.witness->identity_holds);
  for (bool b : same.witness->h) CHECK_FALSE(b);
  for (int v = 0; v < y.diagram.surface().vertex_count(); ++v) {
    auto r = homotopy_witness(y.diagram, cx, y.omegas[0], y.omegas[0] + y.diagram.vertex_loop(v));
    REQUIRE(r.witness);
    CHECK(r.witness->m == 1);
    CHECK(r.witness->identity_holds);
    CHECK(r.witness->disk_relation_holds);
    CHECK(r.induced_maps_equal);
  }
  CHECK_THROWS_AS(homotopy_witness(y.diagram, cx, y.omegas[0], DualCycle{}), HomologyError);
}

TEST_CASE("randomised homotopy witnesses on Y_2") {
  auto y = build_yn_diagram(2);
  auto cx = chain_complex(y.diagram);
  std::mt19937 rng(3);
  const int nv = y.diagram.surface().vertex_count();
  for (int t = 0; t < 20; ++t) {
    DualCycle w = y.omegas[static_cast<std::size_t>(t % 2)];
    DualCycle w2 = w;
    for (int k = 0; k < 3; ++k) {
      auto loop = y.diagram.vertex_loop(static_cast<int>(rng() % static_cast<unsigned>(nv)));
      w2 = rng() % 2 ? w2 + loop : w2 + (-loop);
    }
    auto r = homotopy_witness(y.diagram, cx, w, w2);
    REQUIRE(r.witness);
    CHECK(r.witness->identity_holds);
    CHECK(r.witness->disk_relation_holds);
    CHECK(r.induced_maps_equal);
  }
}
