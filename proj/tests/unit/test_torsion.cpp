#include "doctest.h"
#include "floersut/homology.hpp"

#include <random>
#include <set>

using namespace floersut;

namespace {

// Punctured torus where alpha and beta meet p times; the complement of a
// ball in a lens space with H_1 = Z/p.
SuturedDiagram lens_diagram(int p) {
  // Vertices c_0..c_{p-1}, puncture q. Edges a_i, b_i: c_i -> c_{i+1}, spoke, loop.
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i) edges.push_back({i, (i + 1) % p, EdgeKind::alpha});
  for (int i = 0; i < p; ++i) edges.push_back({i, (i + 1) % p, EdgeKind::beta});
  const int spoke = 2 * p, loop = 2 * p + 1;
  edges.push_back({0, p, EdgeKind::auxiliary});
  edges.push_back({p, p, EdgeKind::boundary});
  auto a = [&](int i) { return (i % p + p) % p; };
  auto b = [&](int i) { return p + (i % p + p) % p; };
  std::vector<Face> faces;
  for (int i = 0; i < p; ++i) {
    Face f{{{a(i), 1}, {b(i + 1), 1}, {a(i + 1), -1}, {b(i), -1}}};
    if (i == 0) {
      f.word.push_back({spoke, 1});
      f.word.push_back({loop, 1});
      f.word.push_back({spoke, -1});
    }
    faces.push_back(f);
  }
  auto s = PolygonalComplex::create(p + 1, edges, faces);
  std::vector<Curve> alphas{{}}, betas{{}};
  for (int i = 0; i < p; ++i) {
    alphas[0].edges.push_back({a(i), 1});
    betas[0].edges.push_back({b(i), 1});
  }
  return SuturedDiagram::create(std::move(s), alphas, betas);
}

std::vector<DualCycle> all_cycles(const SuturedDiagram& d) {
  const IntMatrix z = kernel_basis(smith_normal_form(d.surface().coboundary1()));
  std::vector<DualCycle> out;
  for (std::size_t j = 0; j < z.cols(); ++j) {
    IntVector c(z.rows());
    for (std::size_t i = 0; i < z.rows(); ++i) c[i] = z(i, j);
    out.push_back(d.cycle_from_cochain(c));
  }
  return out;
}

}  // namespace

TEST_CASE("lens space diagrams") {
  for (int p : {1, 2, 3, 5, 6}) {
    auto d = lens_diagram(p);
    CHECK(d.surface().components().front().genus == 1);
    CHECK(validate_diagram(d).ok());
    auto h = relative_h1(d);
    CHECK(h.h1_m_boundary.free_rank == 0);
    if (p > 1)
      CHECK(h.h1_m_boundary.torsion == std::vector<BigInt>{p});
    else
      CHECK(h.h1_m_boundary.torsion.empty());
    auto m = chain_complex(d);
    CHECK(m.generators.size() == static_cast<std::size_t>(p));
    CHECK(m.spinc.class_count() == static_cast<std::size_t>(p));
    CHECK(m.homology.total_rank() == static_cast<std::size_t>(p));
  }
}

TEST_CASE("homotopies across torsion classes") {
  auto d = lens_diagram(6);
  auto cx = chain_complex(d);
  const auto z = all_cycles(d);
  REQUIRE_FALSE(z.empty());
  std::mt19937 rng(6);
  std::set<long> orders;
  std::size_t witnesses = 0, certified = 0;
  for (int k = 0; k < 60; ++k) {
    IntVector c(static_cast<std::size_t>(d.surface().edge_count()));
    for (const auto& w : z) {
      const auto cw = d.cochain(w);
      const int t = static_cast<int>(rng() % 5) - 2;
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += cw[i] * t;
    }
    const auto w2 = d.cycle_from_cochain(c);
    const auto r = homotopy_witness(d, cx, DualCycle{}, w2);
    orders.insert(static_cast<long>(r.torsion_order));
    CHECK(r.induced_maps_equal);
    if (r.torsion_order % 2 == 1) {
      REQUIRE(r.witness);
      CHECK(r.witness->m == r.torsion_order);
      CHECK(r.witness->identity_holds);
      CHECK(r.witness->disk_relation_holds);
      ++witnesses;
    } else {
      CHECK_FALSE(r.witness);
      ++certified;
    }
  }
  CHECK(orders.count(3) == 1);
  CHECK((orders.count(2) + orders.count(6)) >= 1);
  CHECK(witnesses > 0);
  CHECK(certified > 0);
}
