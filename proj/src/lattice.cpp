#include "floersut/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace floersut {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
  IntVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    BigInt acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const BigInt& a = (*this)(r, c);
      if (a != 0 && x[c] != 0) acc += a * x[c];
    }
    y[r] = acc;
  }
  return y;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in product");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        if (other(k, c) != 0) out(r, c) += a * other(k, c);
    }
  return out;
}

IntMatrix IntMatrix::columns(const std::vector<std::size_t>& which) const {
  IntMatrix out(rows_, which.size());
  for (std::size_t j = 0; j < which.size(); ++j)
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, which[j]);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(source, c) != 0) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, source) != 0) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

namespace {

// Floor division so that remainders land in [0, |d|).
BigInt floor_div(const BigInt& a, const BigInt& d) {
  BigInt q = a / d;
  BigInt r = a - q * d;
  if (r != 0 && ((r < 0) != (d < 0))) q -= 1;
  return q;
}

class SmithWorker {
 public:
  explicit SmithWorker(const IntMatrix& a)
      : a_(a),
        left_(IntMatrix::identity(a.rows())),
        left_inv_(IntMatrix::identity(a.rows())),
        right_(IntMatrix::identity(a.cols())),
        right_inv_(IntMatrix::identity(a.cols())) {}

  SmithForm run() {
    const std::size_t m = a_.rows(), n = a_.cols();
    const std::size_t steps = std::min(m, n);
    std::size_t t = 0;
    for (; t < steps; ++t) {
      if (!select_pivot(t)) break;
      for (;;) {
        eliminate(t);
        // Enforce the divisibility chain on the remaining block.
        std::optional<std::size_t> bad_row;
        for (std::size_t i = t + 1; i < m && !bad_row; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (a_(i, j) % a_(t, t) != 0) {
              bad_row = i;
              break;
            }
        if (!bad_row) break;
        row_add(t, *bad_row, 1);
      }
      if (a_(t, t) < 0) row_negate(t);
    }
    SmithForm out;
    out.rows = m;
    out.cols = n;
    out.rank = t;
    out.diagonal.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) out.diagonal[i] = a_(i, i);
    out.left = std::move(left_);
    out.left_inverse = std::move(left_inv_);
    out.right = std::move(right_);
    out.right_inverse = std::move(right_inv_);
    return out;
  }

 private:
  bool select_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        BigInt v = abs(a_(i, j));
        if (!best || v < best_abs) {
          best = {i, j};
          best_abs = v;
          if (best_abs == 1) break;
        }
      }
    if (!best) return false;
    row_swap(t, best->first);
    col_swap(t, best->second);
    return true;
  }

  // Clears row t and column t outside the pivot, moving smaller remainders
  // into the pivot position as needed.
  void eliminate(std::size_t t) {
    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0) continue;
        row_add(i, t, -floor_div(a_(i, t), a_(t, t)));
        if (a_(i, t) != 0) {
          row_swap(t, i);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0) continue;
        col_add(j, t, -floor_div(a_(t, j), a_(t, t)));
        if (a_(t, j) != 0) {
          col_swap(t, j);
          changed = true;
        }
      }
      if (!changed) return;
    }
  }

  void row_swap(std::size_t a, std::size_t b) {
    a_.swap_rows(a, b);
    left_.swap_rows(a, b);
    left_inv_.swap_cols(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    a_.swap_cols(a, b);
    right_.swap_cols(a, b);
    right_inv_.swap_rows(a, b);
  }
  void row_add(std::size_t target, std::size_t source, const BigInt& k) {
    a_.add_row_multiple(target, source, k);
    left_.add_row_multiple(target, source, k);
    left_inv_.add_col_multiple(source, target, -k);
  }
  void col_add(std::size_t target, std::size_t source, const BigInt& k) {
    a_.add_col_multiple(target, source, k);
    right_.add_col_multiple(target, source, k);
    right_inv_.add_row_multiple(source, target, -k);
  }
  void row_negate(std::size_t r) {
    a_.negate_row(r);
    left_.negate_row(r);
    left_inv_.negate_col(r);
  }

  IntMatrix a_, left_, left_inv_, right_, right_inv_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) { return SmithWorker(a).run(); }

IntMatrix reassemble(const SmithForm& snf) {
  IntMatrix d(snf.rows, snf.cols);
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) d(i, i) = snf.diagonal[i];
  return snf.left_inverse * d * snf.right_inverse;
}

std::optional<IntVector> solve_integer(const SmithForm& snf, const IntVector& b) {
  if (b.size() != snf.rows) throw std::invalid_argument("right-hand side has wrong length");
  IntVector c = snf.left.apply(b);
  IntVector z(snf.cols);
  for (std::size_t i = 0; i < snf.rows; ++i) {
    if (i < snf.rank) {
      if (c[i] % snf.diagonal[i] != 0) return std::nullopt;
      z[i] = c[i] / snf.diagonal[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.right.apply(z);
}

IntMatrix kernel_basis(const SmithForm& snf) {
  std::vector<std::size_t> which;
  for (std::size_t j = snf.rank; j < snf.cols; ++j) which.push_back(j);
  return snf.right.columns(which);
}

IntVector kernel_coordinates(const SmithForm& snf, const IntVector& v) {
  IntVector full = snf.right_inverse.apply(v);
  for (std::size_t j = 0; j < snf.rank; ++j)
    if (full[j] != 0) throw std::invalid_argument("vector is not in the kernel");
  return IntVector(full.begin() + static_cast<std::ptrdiff_t>(snf.rank), full.end());
}

AbelianGroupPresentation present_quotient(std::size_t generators, const IntMatrix& relations) {
  if (relations.rows() != generators) throw std::invalid_argument("relation matrix row count");
  SmithForm snf = smith_normal_form(relations);
  AbelianGroupPresentation p;
  p.generators = generators;
  p.relations = relations;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    p.smith.push_back(snf.diagonal[i]);
    if (snf.diagonal[i] > 1) p.torsion.push_back(snf.diagonal[i]);
  }
  p.free_rank = generators - snf.rank;
  p.to_smith = std::move(snf.left);
  p.from_smith = std::move(snf.left_inverse);
  return p;
}

IntVector AbelianGroupPresentation::free_coordinates(const IntVector& x) const {
  IntVector s = to_smith.apply(x);
  return IntVector(s.begin() + static_cast<std::ptrdiff_t>(smith.size()), s.end());
}

BigInt AbelianGroupPresentation::order_of(const IntVector& x) const {
  IntVector s = to_smith.apply(x);
  for (std::size_t i = smith.size(); i < s.size(); ++i)
    if (s[i] != 0) return 0;
  BigInt order = 1;
  for (std::size_t i = 0; i < smith.size(); ++i) {
    BigInt r = s[i] % smith[i];
    if (r == 0) continue;
    BigInt part = smith[i] / boost::multiprecision::gcd(abs(r), smith[i]);
    order = order / boost::multiprecision::gcd(order, part) * part;
  }
  return order;
}

IntVector AbelianGroupPresentation::free_generator(std::size_t i) const {
  if (i >= free_rank) throw std::out_of_range("free generator index");
  return from_smith.column(smith.size() + i);
}

bool AbelianGroupPresentation::is_zero(const IntVector& x) const { return order_of(x) == 1; }

std::string AbelianGroupPresentation::describe() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    out << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace floersut
