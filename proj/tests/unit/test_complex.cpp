#include "doctest.h"
#include "floersut/complex.hpp"

using namespace floersut;

namespace {

std::size_t homology_rank(const SparseGf2Map& dm) {
  std::vector<Gf2Vector> cols;
  for (std::size_t j = 0; j < dm.cols(); ++j) {
    Gf2Vector v(dm.rows());
    for (std::size_t i : dm.column(j)) v.set(i);
    cols.push_back(v);
  }
  return dm.cols() - 2 * gf2_rank(cols);
}

GridSpec one_based(std::vector<int> xs, std::vector<int> os) {
  GridSpec g;
  g.n = static_cast<int>(xs.size());
  for (auto& v : xs) g.xs.push_back(v - 1);
  for (auto& v : os) g.os.push_back(v - 1);
  return g;
}

}  // namespace

TEST_CASE("Y_1 complex") {
  auto y = build_yn_diagram(1);
  auto gens = enumerate_generators(y.diagram);
  REQUIRE(gens.size() == 2);
  auto disks = enumerate_disks(y.diagram, gens);
  CHECK(disks.size() == 2);
  for (const auto& disk : disks) {
    CHECK(disk.corners == 2);
    CHECK(combinatorial_index(y.diagram, disk_domain(y.diagram, disk), gens.generators[disk.from],
                              gens.generators[disk.to]) == 1);
  }
  auto dm = differential_matrix(gens.size(), disks);
  CHECK(dm.is_zero());
  auto a = action_matrix(y.diagram, gens.size(), disks, y.omegas[0]);
  CHECK(a.nonzeros() == 1);
  CHECK((a * a).is_zero());
  auto sp = spinc_partition(y.diagram, gens);
  CHECK(sp.class_count() == 1);
}

TEST_CASE("grid ranks agree with the brute-force oracle") {
  struct Case {
    GridSpec g;
    std::size_t rank;
  };
  // Oracle values from tests/oracles/grid_oracle.py.
  std::vector<Case> cases = {
      {one_based({1, 2}, {2, 1}), 2},
      {one_based({1, 2, 3, 4, 5}, {4, 5, 1, 2, 3}), 48},
      {one_based({1, 2, 3, 4}, {3, 4, 1, 2}), 16},
      {one_based({1, 2, 3, 4}, {2, 1, 4, 3}), 8},
  };
  for (const auto& c : cases) {
    auto gd = grid_to_diagram(c.g);
    auto gens = enumerate_generators(gd.diagram);
    auto disks = enumerate_disks(gd.diagram, gens, 2);
    auto dm = differential_matrix(gens.size(), disks);
    CHECK((dm * dm).is_zero());
    CHECK(homology_rank(dm) == c.rank);
    for (const auto& disk : disks)
      CHECK(combinatorial_index(gd.diagram, disk_domain(gd.diagram, disk), gens.generators[disk.from],
                                gens.generators[disk.to]) == 1);
  }
}
