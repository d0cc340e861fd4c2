#include "floersut/exterior.hpp"

#include <bit>
#include <stdexcept>

namespace floersut {

ExteriorModule::ExteriorModule(int n) : n_(n) {
  if (n < 0 || n > 24) throw std::invalid_argument("exterior rank out of range");
}

int ExteriorModule::degree(std::size_t monomial) { return std::popcount(monomial); }

Gf2Vector ExteriorModule::contraction(int i, const Gf2Vector& x) const {
  if (i < 1 || i > n_) throw std::out_of_range("contraction index out of range");
  if (x.size() != dimension()) throw std::invalid_argument("element has the wrong dimension");
  const std::size_t bit = std::size_t{1} << (i - 1);
  Gf2Vector out(dimension());
  for (std::size_t m : x.support())
    if (m & bit) out.flip(m & ~bit);
  return out;
}

SparseGf2Map ExteriorModule::contraction_matrix(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("contraction index out of range");
  const std::size_t bit = std::size_t{1} << (i - 1);
  SparseGf2Map m(dimension(), dimension());
  for (std::size_t s = 0; s < dimension(); ++s)
    if (s & bit) m.toggle(s & ~bit, s);
  return m;
}

std::vector<Gf2Vector> kernel_intersection(int n) {
  ExteriorModule e(n);
  const std::size_t dim = e.dimension();
  SparseGf2Map stacked(dim * static_cast<std::size_t>(std::max(n, 1)), dim);
  for (int i = 1; i <= n; ++i) {
    const auto c = e.contraction_matrix(i);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t r : c.column(j)) stacked.toggle(r + dim * static_cast<std::size_t>(i - 1), j);
  }
  return gf2_kernel(stacked);
}

std::size_t map_rank(const SparseGf2Map& m) {
  std::vector<Gf2Vector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Gf2Vector v(m.rows());
    for (std::size_t i : m.column(j)) v.set(i);
    cols.push_back(std::move(v));
  }
  return gf2_rank(std::move(cols));
}

ModuleComparison compare_module(const SFHModule& sfh, int n) {
  if (n < 0 || static_cast<std::size_t>(n) > sfh.action.size()) throw std::invalid_argument("not enough action maps");
  ModuleComparison out;
  out.n = n;
  const std::size_t h = sfh.homology.total_rank();
  const std::size_t subsets = std::size_t{1} << n;
  auto composite = [&](std::size_t mask) {
    SparseGf2Map c = SparseGf2Map::identity(h);
    for (int i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) c = sfh.action[static_cast<std::size_t>(i)] * c;
    return c;
  };
  out.ranks_match = true;
  for (std::size_t s = 0; s < subsets; ++s) {
    SubsetRank r{s, map_rank(composite(s)), std::size_t{1} << (n - ExteriorModule::degree(s))};
    if (r.computed != r.expected && out.ranks_match) {
      out.ranks_match = false;
      out.counterexample = s;
    }
    out.subset_ranks.push_back(r);
  }
  if (h != subsets) return out;

  // Top class: a basis vector on which the full composite is nonzero.
  const SparseGf2Map full = composite(subsets - 1);
  std::optional<std::size_t> top;
  for (std::size_t b = 0; b < h && !top; ++b)
    if (!full.column(b).empty()) top = b;
  if (!top) return out;
  const Gf2Vector delta = Gf2Vector::unit(h, *top);
  std::vector<Gf2Vector> images(subsets);
  for (std::size_t s = 0; s < subsets; ++s) images[s] = composite((subsets - 1) & ~s).apply(delta);
  if (gf2_rank(images) != subsets) return out;
  ExteriorModule e(n);
  for (int i = 1; i <= n; ++i)
    for (std::size_t s = 0; s < subsets; ++s) {
      Gf2Vector lhs = sfh.action[static_cast<std::size_t>(i - 1)].apply(images[s]);
      Gf2Vector rhs(h);
      for (std::size_t m : e.contraction(i, e.monomial(s)).support()) rhs ^= images[m];
      if (!(lhs == rhs)) return out;
    }
  out.isomorphism = SparseGf2Map(h, subsets);
  for (std::size_t s = 0; s < subsets; ++s)
    for (std::size_t i : images[s].support()) out.isomorphism.toggle(i, s);
  out.isomorphism_found = true;
  return out;
}

}  // namespace floersut
