#include "doctest.h"
#include "floersut/exterior.hpp"

using namespace floersut;

TEST_CASE("contractions") {
  ExteriorModule e(2);
  CHECK(e.contraction(1, e.monomial(0b11)) == e.monomial(0b10));
  CHECK(e.contraction(1, e.unit()).is_zero());
  CHECK_THROWS(e.contraction(3, e.unit()));
  for (int n = 1; n <= 5; ++n) {
    ExteriorModule m(n);
    Gf2Vector x = m.top();
    for (int i = n; i >= 1; --i) x = m.contraction(i, x);
    CHECK(x == m.unit());
    for (int i = 1; i <= n; ++i) {
      auto ci = m.contraction_matrix(i);
      CHECK((ci * ci).is_zero());
      CHECK(map_rank(ci) == m.dimension() / 2);
      for (int j = 1; j <= n; ++j) CHECK(ci * m.contraction_matrix(j) == m.contraction_matrix(j) * ci);
    }
  }
}

TEST_CASE("kernel intersection is spanned by the unit") {
  CHECK(kernel_intersection(0).size() == 1);
  for (int n = 1; n <= 10; ++n) {
    auto k = kernel_intersection(n);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == ExteriorModule(n).unit());
  }
}

TEST_CASE("Y_n modules match the exterior algebra") {
  for (int n = 1; n <= 3; ++n) {
    auto y = build_yn_diagram(n);
    auto m = module_structure(y.diagram, y.omegas);
    auto c = compare_module(m, n);
    CHECK(c.ranks_match);
    CHECK(c.isomorphism_found);
    CHECK(c.subset_ranks.size() == (std::size_t{1} << n));
  }
}
