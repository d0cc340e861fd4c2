#include "floersut/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace floersut {

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  if (other.size_ != size_) throw std::invalid_argument("GF(2) vector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool Gf2Vector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Gf2Vector::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::size_t> Gf2Vector::lowest() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return std::nullopt;
}

std::vector<std::size_t> Gf2Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

void SparseGf2Map::toggle(std::size_t row, std::size_t col) {
  if (row >= rows_ || col >= columns_.size()) throw std::out_of_range("sparse map index");
  auto& c = columns_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row);
  if (it != c.end() && *it == row)
    c.erase(it);
  else
    c.insert(it, row);
}

bool SparseGf2Map::entry(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  return std::binary_search(c.begin(), c.end(), row);
}

std::size_t SparseGf2Map::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

Gf2Vector SparseGf2Map::apply(const Gf2Vector& x) const {
  if (x.size() != cols()) throw std::invalid_argument("sparse map apply size");
  Gf2Vector y(rows_);
  for (std::size_t j : x.support())
    for (std::size_t i : columns_[j]) y.flip(i);
  return y;
}

SparseGf2Map SparseGf2Map::operator*(const SparseGf2Map& right) const {
  if (cols() != right.rows()) throw std::invalid_argument("sparse map product size");
  SparseGf2Map out(rows_, right.cols());
  for (std::size_t j = 0; j < right.cols(); ++j) {
    Gf2Vector acc(rows_);
    for (std::size_t k : right.columns_[j])
      for (std::size_t i : columns_[k]) acc.flip(i);
    out.columns_[j] = acc.support();
  }
  return out;
}

SparseGf2Map SparseGf2Map::operator+(const SparseGf2Map& other) const {
  if (rows_ != other.rows_ || cols() != other.cols())
    throw std::invalid_argument("sparse map sum size");
  SparseGf2Map out(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) {
    auto& dst = out.columns_[j];
    std::set_symmetric_difference(columns_[j].begin(), columns_[j].end(),
                                  other.columns_[j].begin(), other.columns_[j].end(),
                                  std::back_inserter(dst));
  }
  return out;
}

SparseGf2Map SparseGf2Map::identity(std::size_t n) {
  SparseGf2Map m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = {i};
  return m;
}

SparseGf2Map SparseGf2Map::diagonal(const std::vector<bool>& entries) {
  SparseGf2Map m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i]) m.columns_[i] = {i};
  return m;
}

std::size_t gf2_rank(std::vector<Gf2Vector> vectors) {
  if (vectors.empty()) return 0;
  Gf2Echelon e(vectors.front().size(), 0);
  for (auto& v : vectors) e.insert(std::move(v));
  return e.rank();
}

bool Gf2Echelon::insert(Gf2Vector v, Gf2Vector tag) {
  if (v.size() != dimension_ || tag.size() != tag_dimension_)
    throw std::invalid_argument("echelon insert size");
  if (pivot_row_.empty()) pivot_row_.assign(dimension_, std::nullopt);
  while (auto p = v.lowest()) {
    if (!pivot_row_[*p]) {
      pivot_row_[*p] = rows_.size();
      rows_.push_back({*p, std::move(v), std::move(tag)});
      return true;
    }
    const Row& r = rows_[*pivot_row_[*p]];
    v ^= r.value;
    tag ^= r.tag;
  }
  return false;
}

std::pair<Gf2Vector, Gf2Vector> Gf2Echelon::reduce(Gf2Vector v) const {
  Gf2Vector tag(tag_dimension_);
  if (pivot_row_.empty()) return {std::move(v), std::move(tag)};
  // Rows are not fully reduced against each other, so scan pivots in
  // increasing order: clearing pivot p never sets a lower bit.
  Gf2Vector residue(dimension_);
  for (;;) {
    auto p = v.lowest();
    if (!p) break;
    if (pivot_row_[*p]) {
      const Row& r = rows_[*pivot_row_[*p]];
      v ^= r.value;
      tag ^= r.tag;
    } else {
      residue.set(*p);
      v.flip(*p);
    }
  }
  return {std::move(residue), std::move(tag)};
}

std::vector<Gf2Vector> gf2_kernel(const SparseGf2Map& map) {
  // Column reduction with tags: combinations of columns that reduce to zero
  // span the kernel.
  const std::size_t n = map.cols();
  Gf2Echelon e(map.rows(), n);
  std::vector<Gf2Vector> kernel;
  for (std::size_t j = 0; j < n; ++j) {
    Gf2Vector col(map.rows());
    for (std::size_t i : map.column(j)) col.set(i);
    auto [residue, tag] = e.reduce(col);
    tag.flip(j);
    if (residue.is_zero())
      kernel.push_back(std::move(tag));
    else
      e.insert(col, Gf2Vector::unit(n, j));
  }
  return kernel;
}

}  // namespace floersut
