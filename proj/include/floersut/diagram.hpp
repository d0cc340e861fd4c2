#pragma once

// Balanced sutured Heegaard diagrams on a PolygonalComplex.
//
// Regions are the components of the surface cut along the alpha and beta
// curves: faces glued across auxiliary edges. A region is interior when none
// of its faces touches a boundary-segment edge. Relative 1-cycles are stored
// as dual crossings (edge, sign); crossing edge e out of the face that
// traverses +e counts +1. Such a crossing list is a relative 1-cycle exactly
// when its edge cochain is a cocycle, which lets all homology computations
// below run on the cellular cochain complex of the surface.

#include "floersut/lattice.hpp"
#include "floersut/surface.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace floersut {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed alpha or beta curve as a cyclic sequence of edge uses.
struct Curve {
  std::vector<EdgeUse> edges;
};

/// Relative 1-cycle in general position: a list of transverse edge
/// crossings. Order is kept for display and path checks; the homology class
/// depends only on the signed count per edge.
struct DualCycle {
  std::vector<EdgeUse> crossings;
};

DualCycle operator+(const DualCycle& a, const DualCycle& b);
DualCycle operator-(const DualCycle& a);

struct Region {
  std::vector<int> faces;
  bool interior = false;
  int corners = 0;             // convex alpha/beta corners
  int euler_characteristic = 0;  // of the open region
};

/// The four regions around a transverse crossing, in rotational order, with
/// the curve edge uses leaving the vertex that separate them.
struct CrossingQuadrant {
  int region = -1;
  std::vector<Wedge> wedges;
  EdgeUse incoming;  // curve edge use arriving at the vertex (face-boundary order)
  EdgeUse outgoing;  // curve edge use leaving the vertex
};

class SuturedDiagram {
 public:
  SuturedDiagram() = default;

  /// Checks structural well-formedness (curves are closed embedded walks of
  /// the right kind, every curve edge lies on exactly one curve, same-kind
  /// curves are disjoint, alpha/beta meet transversely). Throws DiagramError.
  static SuturedDiagram create(PolygonalComplex surface, std::vector<Curve> alphas, std::vector<Curve> betas);

  const PolygonalComplex& surface() const { return surface_; }
  const std::vector<Curve>& alphas() const { return alphas_; }
  const std::vector<Curve>& betas() const { return betas_; }

  const std::vector<Region>& regions() const { return regions_; }
  int region_of_face(int f) const { return region_of_face_.at(static_cast<std::size_t>(f)); }
  const std::vector<int>& interior_regions() const { return interior_regions_; }
  /// Index of a region among interior regions, or -1.
  int interior_index(int region) const { return interior_index_.at(static_cast<std::size_t>(region)); }

  /// Vertices where an alpha and a beta curve cross, sorted.
  const std::vector<int>& crossings() const { return crossings_; }
  bool is_crossing(int v) const { return alpha_at_vertex_[static_cast<std::size_t>(v)] >= 0 && beta_at_vertex_[static_cast<std::size_t>(v)] >= 0; }
  int alpha_at_vertex(int v) const { return alpha_at_vertex_.at(static_cast<std::size_t>(v)); }
  int beta_at_vertex(int v) const { return beta_at_vertex_.at(static_cast<std::size_t>(v)); }
  /// Curve index of an alpha or beta edge, else -1.
  int curve_of_edge(int e) const { return curve_of_edge_.at(static_cast<std::size_t>(e)); }
  const std::vector<CrossingQuadrant>& quadrants(int v) const { return quadrants_.at(static_cast<std::size_t>(v)); }
  /// Crossings on a given alpha curve, sorted by vertex id.
  const std::vector<int>& crossings_on_alpha(int i) const { return alpha_crossings_.at(static_cast<std::size_t>(i)); }

  /// The curve use that leaves the end vertex of an arriving curve use while
  /// keeping the region on the left (a convex turn), or nothing if the end
  /// vertex is not a crossing.
  std::optional<EdgeUse> turn_left(EdgeUse arriving) const;
  /// Wedge following w around its vertex (crossing w's outgoing edge).
  std::optional<Wedge> next_wedge(Wedge w) const;
  /// Next use along the curve carrying `u`, in the direction of `u`.
  EdgeUse continue_along(EdgeUse u) const;

  /// Signed crossing count per edge.
  IntVector cochain(const DualCycle& omega) const;
  std::vector<long long> cochain_small(const DualCycle& omega) const;
  /// Throws DiagramError if a crossing references a missing edge or the
  /// crossings do not form a relative 1-cycle.
  void check_cycle(const DualCycle& omega) const;
  /// True if consecutive crossings always share a face.
  bool is_path_ordered(const DualCycle& omega) const;
  /// Crossing list reading a cocycle edge by edge.
  DualCycle cycle_from_cochain(const IntVector& c) const;
  /// Small loop (or boundary-to-boundary arc) around a vertex.
  DualCycle vertex_loop(int v) const;

  /// Subdivides an edge of the underlying surface and carries curves along.
  SuturedDiagram subdivide(int e) const;

 private:
  void build();

  PolygonalComplex surface_;
  std::vector<Curve> alphas_, betas_;
  std::vector<Region> regions_;
  std::vector<int> region_of_face_;
  std::vector<int> interior_regions_;
  std::vector<int> interior_index_;
  std::vector<int> crossings_;
  std::vector<int> alpha_at_vertex_, beta_at_vertex_;
  std::vector<int> curve_of_edge_;
  std::vector<std::vector<CrossingQuadrant>> quadrants_;
  std::vector<std::vector<int>> alpha_crossings_;
  std::vector<int> curve_position_;  // per edge: index in its curve, or -1
};

// ---------------------------------------------------------------------------
// Validation

struct ValidationReport {
  bool balanced = false;
  bool every_component_has_boundary = false;
  bool nice = false;
  bool admissible = false;
  std::optional<int> non_nice_region;                 // witness
  std::optional<std::vector<BigInt>> periodic_witness;  // nonnegative periodic domain, per interior region
  std::vector<std::string> messages;

  bool ok() const { return balanced && every_component_has_boundary && nice && admissible; }
};

ValidationReport validate_diagram(const SuturedDiagram& d);

/// Vertex x interior-region matrix of the alpha part of region boundaries:
/// column r is the 0-chain boundary of (boundary of r restricted to alpha).
/// Its kernel is the periodic domain lattice; connecting domains solve it
/// against y - x.
IntMatrix alpha_corner_matrix(const SuturedDiagram& d);

/// Some nonzero periodic domain with all coefficients >= 0, found by exact
/// rational linear programming, or nothing if the diagram is admissible.
std::optional<std::vector<BigInt>> find_nonnegative_periodic_domain(const SuturedDiagram& d);

// ---------------------------------------------------------------------------
// Homology of the sutured manifold

/// H_1 groups computed as quotients of the cocycle lattice Z^1(Sigma):
///   H_1(Sigma, dSigma) = Z^1 / B^1
///   H_1(M, gamma)      = Z^1 / (B^1 + pushoffs of alpha and beta curves)
///   H_1(M, dM)         = Z^1 / (B^1 + cocycles vanishing on alpha
///                                  + cocycles vanishing on beta)
struct RelativeHomology {
  AbelianGroupPresentation h1_surface_rel_boundary;
  AbelianGroupPresentation h1_m_gamma;
  AbelianGroupPresentation h1_m_boundary;
  std::vector<DualCycle> free_basis;  // representatives for H_1(M, dM)/Tors
  SmithForm cocycle_form;             // Smith form of delta1
  bool quotient_map_surjective = false;

  IntVector cocycle_coordinates(const IntVector& cochain) const;
};

RelativeHomology relative_h1(const SuturedDiagram& d);

/// Integer coordinates of [omega] in the free basis of H_1(M, dM)/Tors.
IntVector class_of_cycle(const SuturedDiagram& d, const RelativeHomology& h, const DualCycle& omega);

/// Lattice basis (edge x k) of cocycles vanishing on every edge of a kind.
IntMatrix cocycles_vanishing_on(const SuturedDiagram& d, EdgeKind kind);

/// Cocycle of a parallel copy of a curve pushed off to its left.
IntVector curve_pushoff(const SuturedDiagram& d, const Curve& curve);

// ---------------------------------------------------------------------------
// Builders

struct YnDiagram {
  SuturedDiagram diagram;
  std::vector<DualCycle> omegas;
};

/// Genus-n surface with one boundary circle; each handle carries alpha_i and
/// beta_i meeting in two points that bound two interior bigons.
YnDiagram build_yn_diagram(int n);

struct GridSpec {
  int n = 0;
  std::vector<int> xs;  // row of the X marking in each column, 0-based
  std::vector<int> os;  // row of the O marking in each column, 0-based
  int components() const;
  void check() const;   // throws DiagramError
};

/// Optional rectangular patch P spanned by the marked squares at columns
/// a, b and rows r1, r2; its sides run rightward from column a to b and
/// upward from row r1 to r2 (cyclically).
struct GridPatch {
  int col_a = 0, col_b = 0, row_1 = 0, row_2 = 0;
};

struct GridDiagram {
  SuturedDiagram diagram;
  std::vector<int> patch_faces;
  std::vector<int> a_edges;
  std::vector<int> b_edges;
};

/// Toric grid diagram with a disk removed from every marked square.
GridDiagram grid_to_diagram(const GridSpec& g, const std::optional<GridPatch>& patch = std::nullopt);

/// Disjoint union; the second diagram's ids are shifted after the first's.
SuturedDiagram disjoint_union(const SuturedDiagram& a, const SuturedDiagram& b);
DualCycle shift_cycle(const DualCycle& omega, int edge_offset);

}  // namespace floersut
