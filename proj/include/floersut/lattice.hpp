#pragma once

// Exact integer linear algebra: dense matrices over Z, Smith normal form with
// recorded unimodular transforms, integer system solving, and finitely
// generated abelian group presentations.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace floersut {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  IntVector apply(const IntVector& x) const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  // Selects a subset of columns, in the given order.
  IntMatrix columns(const std::vector<std::size_t>& which) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor);
  // col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Smith normal form `left * A * right = diagonal`, with `left`, `right`
/// unimodular and their inverses recorded. The diagonal entries are
/// nonnegative and each divides the next; `rank` counts the nonzero ones.
struct SmithForm {
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix right;
  IntMatrix right_inverse;
  std::vector<BigInt> diagonal;  // length min(rows, cols)
  std::size_t rank = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Rebuilds left^{-1} * D * right^{-1}; equals the input for a correct form.
IntMatrix reassemble(const SmithForm& snf);

/// Some integer solution of A x = b, or nothing if none exists.
std::optional<IntVector> solve_integer(const SmithForm& snf, const IntVector& b);

/// Columns spanning ker(A) over Z (a lattice basis).
IntMatrix kernel_basis(const SmithForm& snf);

/// Coordinates of a kernel vector in the basis returned by kernel_basis.
IntVector kernel_coordinates(const SmithForm& snf, const IntVector& v);

/// Z^n / (column span of relations), in Smith coordinates.
struct AbelianGroupPresentation {
  std::size_t generators = 0;
  IntMatrix relations;
  std::vector<BigInt> smith;   // nonzero invariant factors, divisibility chain
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
  IntMatrix to_smith;           // x -> Smith coordinates
  IntMatrix from_smith;

  // Free-part coordinates of an element (torsion discarded).
  IntVector free_coordinates(const IntVector& x) const;
  // Order of the torsion component of x; 0 if x has nonzero free part.
  BigInt order_of(const IntVector& x) const;
  // A preimage in Z^n of the i-th free generator.
  IntVector free_generator(std::size_t i) const;
  bool is_zero(const IntVector& x) const;
  std::string describe() const;
};

AbelianGroupPresentation present_quotient(std::size_t generators, const IntMatrix& relations);

}  // namespace floersut
