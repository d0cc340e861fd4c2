#pragma once

// GF(2) homology of the sutured Floer complex, induced maps, the
// exterior-algebra module structure and chain-homotopy witnesses between
// action maps of homologous relative cycles.

#include "floersut/complex.hpp"
#include "floersut/diagram.hpp"
#include "floersut/gf2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace floersut {

class HomologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Homology of a complex split into Spin^c blocks. Basis elements are cycle
/// representatives, grouped by class in class order.
class HomologyData {
 public:
  HomologyData() = default;
  HomologyData(const SparseGf2Map& differential, const SpincPartition& partition);

  std::size_t total_rank() const { return basis_.size(); }
  const std::vector<std::size_t>& class_ranks() const { return class_ranks_; }
  const std::vector<Gf2Vector>& basis() const { return basis_; }
  const std::vector<int>& basis_class() const { return basis_class_; }
  const SparseGf2Map& differential() const { return differential_; }

  /// Coordinates of a cycle in the basis. Throws HomologyError for non-cycles.
  Gf2Vector coordinates(const Gf2Vector& cycle) const;
  /// True if the chain is a boundary.
  bool is_boundary(const Gf2Vector& chain) const;

 private:
  SparseGf2Map differential_;
  std::vector<std::size_t> class_ranks_;
  std::vector<Gf2Vector> basis_;
  std::vector<int> basis_class_;
  Gf2Echelon reducer_{0, 0};
  Gf2Echelon boundaries_{0, 0};
};

/// Map on homology induced by a chain map, as a (target rank x source rank)
/// matrix. Throws HomologyError if f does not commute with the differentials.
SparseGf2Map induced_map(const SparseGf2Map& f, const HomologyData& source, const HomologyData& target);

/// Restriction of a block-diagonal homology map to one Spin^c class.
SparseGf2Map class_block(const SparseGf2Map& m, const HomologyData& h, int cls);

struct PropertyCheck {
  std::string name;
  bool passed = false;
};

struct SFHModule {
  GeneratorSet generators;
  SpincPartition spinc;
  std::vector<Disk> disks;
  SparseGf2Map differential;
  HomologyData homology;
  std::vector<DualCycle> h1_basis;
  std::vector<SparseGf2Map> chain_actions;  // A_omega on chains, per basis element
  std::vector<SparseGf2Map> action;         // induced maps on homology
  std::vector<PropertyCheck> properties;

  bool all_properties_hold() const;
};

/// Full pipeline from a valid diagram. When h1_basis is empty the free basis
/// of H_1(M, dM)/Tors from relative_h1 is used.
SFHModule module_structure(const SuturedDiagram& d, std::vector<DualCycle> h1_basis = {}, int threads = 1);

/// Complex, disks and homology without any action maps.
SFHModule chain_complex(const SuturedDiagram& d, int threads = 1);

struct HomotopyWitness {
  BigInt m;                       // odd multiplier
  IntVector vertex_values;        // B as a function on surface vertices (dual 2-chain)
  std::vector<BigInt> n_x;        // n_x(B) per generator, after normalisation
  std::vector<bool> h;            // H(x) = (n_x(B) / m) x over GF(2)
  bool identity_holds = false;    // A_1 + A_2 = dH + Hd
  bool disk_relation_holds = false;  // n_x - n_y = m (omega1 - omega2) . d_alpha(phi) for every disk
};

struct HomotopyResult {
  std::optional<HomotopyWitness> witness;
  BigInt torsion_order;            // order of [omega2 - omega1] in H_1(M, dM)
  bool induced_maps_equal = false;  // always checked
};

/// Chain homotopy between A_omega1 and A_omega2 for homologous cycles. The
/// witness is absent when the torsion order of the difference is even.
/// Throws HomologyError when the classes differ modulo torsion.
HomotopyResult homotopy_witness(const SuturedDiagram& d, const SFHModule& complex, const DualCycle& omega1,
                                const DualCycle& omega2);

}  // namespace floersut
