#pragma once

// Dense and sparse linear algebra over GF(2).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace floersut {

class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static Gf2Vector unit(std::size_t size, std::size_t i) {
    Gf2Vector v(size);
    v.set(i);
    return v;
  }

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value)
      words_[i / 64] |= bit;
    else
      words_[i / 64] &= ~bit;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  Gf2Vector& operator^=(const Gf2Vector& other);
  bool operator==(const Gf2Vector& other) const = default;

  bool is_zero() const;
  std::size_t popcount() const;
  // Index of the lowest set bit, if any.
  std::optional<std::size_t> lowest() const;
  std::vector<std::size_t> support() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Sparse GF(2) matrix stored by columns: column j lists the sorted row
/// indices with entry 1. Used for the differential and action maps, with
/// columns indexed by source generators.
class SparseGf2Map {
 public:
  SparseGf2Map() = default;
  SparseGf2Map(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  // Adds 1 to entry (row, col), toggling it.
  void toggle(std::size_t row, std::size_t col);
  bool entry(std::size_t row, std::size_t col) const;
  const std::vector<std::size_t>& column(std::size_t col) const { return columns_[col]; }

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  Gf2Vector apply(const Gf2Vector& x) const;
  SparseGf2Map operator*(const SparseGf2Map& right) const;
  SparseGf2Map operator+(const SparseGf2Map& other) const;
  bool operator==(const SparseGf2Map& other) const = default;

  static SparseGf2Map identity(std::size_t n);
  static SparseGf2Map diagonal(const std::vector<bool>& entries);

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<std::size_t>> columns_;
};

std::size_t gf2_rank(std::vector<Gf2Vector> vectors);

/// Incrementally built echelon basis. Each inserted vector carries a tag
/// vector recording which caller-supplied labels it is a combination of, so
/// reductions return coordinates.
class Gf2Echelon {
 public:
  Gf2Echelon(std::size_t dimension, std::size_t tag_dimension)
      : dimension_(dimension), tag_dimension_(tag_dimension) {}

  // Returns true if v was independent of the current span.
  bool insert(Gf2Vector v, Gf2Vector tag);
  bool insert(Gf2Vector v) { return insert(std::move(v), Gf2Vector(tag_dimension_)); }

  // Reduces v against the basis; returns the residue and the accumulated tag.
  std::pair<Gf2Vector, Gf2Vector> reduce(Gf2Vector v) const;
  bool contains(const Gf2Vector& v) const { return reduce(v).first.is_zero(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    std::size_t pivot;
    Gf2Vector value;
    Gf2Vector tag;
  };
  std::size_t dimension_;
  std::size_t tag_dimension_;
  std::vector<Row> rows_;
  std::vector<std::optional<std::size_t>> pivot_row_;
};

/// Basis of the null space of a map, as vectors in the source space.
std::vector<Gf2Vector> gf2_kernel(const SparseGf2Map& map);

}  // namespace floersut
