#pragma once

// Surface diagrams (Sigma, alpha, beta, P) and the cut-and-reglue diagram
// Sigma' = (Sigma \ P) u P_A u P_B, with the maps relating the two chain
// complexes.

#include "floersut/complex.hpp"
#include "floersut/diagram.hpp"
#include "floersut/homology.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace floersut {

struct SurfaceDiagramP {
  SuturedDiagram base;
  std::vector<int> p_faces;
  std::vector<int> a_edges;
  std::vector<int> b_edges;
};

/// Empty list when sd is valid, else the failed invariants.
std::vector<std::string> check_surface_diagram(const SurfaceDiagramP& sd);

enum class Sheet { outside = 0, a = 1, b = 2 };

struct Decomposition {
  SuturedDiagram diagram;
  std::vector<int> vertex_map;                      // new vertex -> old vertex
  std::vector<int> edge_map;                        // new edge -> old edge
  std::vector<std::pair<int, Sheet>> face_map;      // new face -> (old face, sheet)
  std::vector<std::array<int, 3>> face_copy;        // old face -> new face per sheet, or -1
  // Closures of the three sheets are taken inside Sigma'; euler_patch is chi(P)
  // in Sigma. euler_gluing sums (sheets meeting a cell - 1), vertices minus edges.
  int euler_new = 0, euler_outside = 0, euler_patch_a = 0, euler_patch_b = 0, euler_patch = 0, euler_gluing = 0;
};

/// Throws DiagramError when sd is invalid.
Decomposition decompose(const SurfaceDiagramP& sd);

/// Base generators with no coordinate in P, increasing.
std::vector<int> outer_generators(const SurfaceDiagramP& sd, const GeneratorSet& gens);

/// Homologous cycle with no crossings on B edges.
DualCycle push_off_b(const SurfaceDiagramP& sd, const DualCycle& omega);

/// Lift of a B-avoiding cycle into (Sigma \ P) u P_A. Throws DiagramError if
/// omega meets B.
DualCycle lift_cycle(const SurfaceDiagramP& sd, const Decomposition& dec, const DualCycle& omega);

struct Theorem1Report {
  bool surface_valid = false;
  bool new_diagram_valid = false;
  bool bijection = false;                 // O_P <-> generators of Sigma' via p
  bool splitting = false;                 // d and A preserve span(O_P) and its complement
  bool disks_match = false;               // disks between O_P generators correspond via p
  bool weights_match = false;             // omega . d_alpha phi = omega' . d_alpha phi'
  bool inclusion_commutes = false;        // iota A' = A iota
  bool projection_commutes = false;       // A' pi = pi A
  bool projection_inclusion_identity = false;
  std::size_t outer_generator_count = 0;
  std::size_t base_generator_count = 0;
  std::size_t matched_disks = 0;
  std::vector<std::string> failures;

  bool all_green() const {
    return surface_valid && new_diagram_valid && bijection && splitting && disks_match && weights_match &&
           inclusion_commutes && projection_commutes && projection_inclusion_identity;
  }
};

Theorem1Report check_theorem1(const SurfaceDiagramP& sd, const DualCycle& omega, int threads = 1);

}  // namespace floersut
