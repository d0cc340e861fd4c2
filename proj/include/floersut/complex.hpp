#pragma once

// The sutured Floer chain complex of a nice diagram over GF(2): generators,
// empty embedded bigons and rectangles, the differential and the
// homological action maps.

#include "floersut/diagram.hpp"
#include "floersut/gf2.hpp"
#include "floersut/lp.hpp"

#include <map>
#include <optional>
#include <vector>

namespace floersut {

/// One intersection point per alpha curve: points[i] lies on alpha_i.
using Generator = std::vector<int>;

struct GeneratorSet {
  std::vector<Generator> generators;
  std::map<Generator, int> index;

  std::size_t size() const { return generators.size(); }
  int find(const Generator& x) const;
};

/// All tuples meeting every alpha and beta curve once, in lexicographic order.
GeneratorSet enumerate_generators(const SuturedDiagram& d);

/// An empty embedded bigon or rectangle from generator `from` to `to`.
struct Disk {
  int from = 0;
  int to = 0;
  int corners = 0;
  std::vector<int> faces;               // sorted
  std::vector<EdgeUse> boundary;        // oriented boundary loop
  std::vector<EdgeUse> alpha_boundary;  // its alpha arcs, from x-corners to y-corners
};

/// Every empty embedded bigon and rectangle between generators. Work is
/// split over source generators; the result order does not depend on the
/// thread count.
std::vector<Disk> enumerate_disks(const SuturedDiagram& d, const GeneratorSet& gens, int threads = 1);

/// Thread count from FLOERSUT_THREADS, default 1.
int default_thread_count();

/// Column x holds the generators y with an odd number of disks x -> y.
SparseGf2Map differential_matrix(std::size_t generator_count, const std::vector<Disk>& disks);

/// omega . (alpha boundary of the disk), with omega as an edge cochain.
long long disk_weight(const std::vector<long long>& cochain, const Disk& disk);

/// A_omega: sum over disks of (omega . d_alpha phi) mod 2.
SparseGf2Map action_matrix(const SuturedDiagram& d, std::size_t generator_count, const std::vector<Disk>& disks,
                           const DualCycle& omega);

struct SpincPartition {
  std::vector<int> class_of;                // per generator
  std::vector<std::vector<int>> members;    // per class, increasing
  std::vector<IntVector> labels;            // canonical cokernel coordinates
  std::size_t class_count() const { return members.size(); }
};

/// Groups generators by the existence of a connecting domain.
SpincPartition spinc_partition(const SuturedDiagram& d, const GeneratorSet& gens);

/// Integer coefficients on interior regions of a domain D with
/// boundary(boundary(D) restricted to alpha) = y - x, if one exists.
std::optional<IntVector> connecting_domain(const SuturedDiagram& d, const Generator& x, const Generator& y);

/// Euler measure plus point measures at x and y of a domain given by
/// interior-region coefficients.
Rational combinatorial_index(const SuturedDiagram& d, const IntVector& domain, const Generator& x, const Generator& y);

/// Interior-region coefficients of a disk.
IntVector disk_domain(const SuturedDiagram& d, const Disk& disk);

}  // namespace floersut
