#pragma once

// The exterior algebra on n generators over GF(2) with contraction
// operators, used as a reference model for the module structure.

#include "floersut/gf2.hpp"
#include "floersut/homology.hpp"

#include <optional>
#include <vector>

namespace floersut {

/// Elements are GF(2) vectors over the 2^n monomials; bit i-1 of a monomial
/// index marks the generator i.
class ExteriorModule {
 public:
  explicit ExteriorModule(int n);

  int rank() const { return n_; }
  std::size_t dimension() const { return std::size_t{1} << n_; }
  static int degree(std::size_t monomial);

  Gf2Vector unit() const { return Gf2Vector::unit(dimension(), 0); }
  Gf2Vector top() const { return Gf2Vector::unit(dimension(), dimension() - 1); }
  Gf2Vector monomial(std::size_t mask) const { return Gf2Vector::unit(dimension(), mask); }

  /// Interior product with the i-th dual generator, 1 <= i <= n.
  Gf2Vector contraction(int i, const Gf2Vector& x) const;
  SparseGf2Map contraction_matrix(int i) const;

 private:
  int n_;
};

/// Basis of the common kernel of all contractions.
std::vector<Gf2Vector> kernel_intersection(int n);

struct SubsetRank {
  std::size_t subset = 0;  // bitmask over action indices
  std::size_t computed = 0;
  std::size_t expected = 0;
};

struct ModuleComparison {
  int n = 0;
  std::vector<SubsetRank> subset_ranks;
  bool ranks_match = false;
  std::optional<std::size_t> counterexample;
  bool isomorphism_found = false;
  SparseGf2Map isomorphism;  // exterior monomials -> homology basis
};

/// Rank profile of composites of the first n action maps against the
/// contractions, and a greedy module isomorphism built from a top class.
ModuleComparison compare_module(const SFHModule& sfh, int n);

std::size_t map_rank(const SparseGf2Map& m);

}  // namespace floersut
