#include "doctest.h"
#include "floersut/gf2.hpp"
#include "floersut/lattice.hpp"

#include <random>

using namespace floersut;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-4, 4);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("smith form reassembles and has a divisibility chain") {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    auto a = random_matrix(rng, 1 + t % 5, 1 + (t * 3) % 6);
    auto s = smith_normal_form(a);
    CHECK(reassemble(s) == a);
    CHECK(s.left * s.left_inverse == IntMatrix::identity(a.rows()));
    CHECK(s.right * s.right_inverse == IntMatrix::identity(a.cols()));
    for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    for (std::size_t i = 0; i < s.rank; ++i) CHECK(s.diagonal[i] > 0);
  }
}

TEST_CASE("integer solving and kernels") {
  IntMatrix a(2, 3);
  a(0, 0) = 2; a(0, 1) = 4; a(0, 2) = 6;
  a(1, 0) = 1; a(1, 1) = 1; a(1, 2) = 1;
  auto s = smith_normal_form(a);
  auto x = solve_integer(s, {BigInt(2), BigInt(1)});
  REQUIRE(x);
  CHECK(a.apply(*x) == IntVector{2, 1});
  CHECK_FALSE(solve_integer(s, {BigInt(1), BigInt(0)}));
  auto k = kernel_basis(s);
  CHECK(k.cols() == 1);
  auto v = k.column(0);
  CHECK(a.apply(v) == IntVector{0, 0});
  CHECK(kernel_coordinates(s, v) == IntVector{1});
}

TEST_CASE("quotient presentations") {
  IntMatrix rel(2, 1);
  rel(0, 0) = 2; rel(1, 0) = 0;
  auto p = present_quotient(2, rel);
  CHECK(p.free_rank == 1);
  REQUIRE(p.torsion.size() == 1);
  CHECK(p.torsion[0] == 2);
  CHECK(p.order_of({BigInt(1), BigInt(0)}) == 2);
  CHECK(p.order_of({BigInt(2), BigInt(0)}) == 1);
  CHECK(p.is_zero({BigInt(2), BigInt(0)}));
  CHECK(p.order_of({BigInt(0), BigInt(1)}) == 0);
}

TEST_CASE("gf2 kernel and echelon") {
  SparseGf2Map m(2, 3);
  m.toggle(0, 0); m.toggle(0, 1); m.toggle(1, 1); m.toggle(1, 2);
  auto k = gf2_kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(m.apply(k[0]).is_zero());
  CHECK(k[0].popcount() == 3);
  CHECK((m * SparseGf2Map::identity(3)) == m);
  Gf2Echelon e(3, 2);
  e.insert(Gf2Vector::unit(3, 0), Gf2Vector::unit(2, 0));
  e.insert(Gf2Vector::unit(3, 1), Gf2Vector::unit(2, 1));
  Gf2Vector v(3); v.set(0); v.set(1);
  auto [res, tag] = e.reduce(v);
  CHECK(res.is_zero());
  CHECK(tag.popcount() == 2);
  CHECK_FALSE(e.contains(Gf2Vector::unit(3, 2)));
}
