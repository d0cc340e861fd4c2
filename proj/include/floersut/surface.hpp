#pragma once

// Combinatorial oriented surfaces with boundary.
//
// A PolygonalComplex is given by vertices, oriented edges and polygonal faces
// whose boundary words list signed edge uses counterclockwise (the face lies
// to the left of every use). Interior edges appear exactly twice in face
// words, once with each sign; boundary-segment edges appear exactly once.
// Boundary circles, vertex rotations and corner wedges are derived.

#include "floersut/lattice.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace floersut {

enum class EdgeKind { alpha, beta, boundary, auxiliary };

const char* to_string(EdgeKind kind);
std::optional<EdgeKind> edge_kind_from_string(const std::string& s);

struct Edge {
  int source = 0;
  int target = 0;
  EdgeKind kind = EdgeKind::auxiliary;
};

/// An edge traversed forward (+1) or backward (-1).
struct EdgeUse {
  int edge = 0;
  int sign = 1;
  bool operator==(const EdgeUse&) const = default;
  EdgeUse reversed() const { return {edge, -sign}; }
};

struct Face {
  std::vector<EdgeUse> word;
};

/// Position of an edge use inside a face word.
struct Occurrence {
  int face = 0;
  int position = 0;
  bool operator==(const Occurrence&) const = default;
};

/// Corner of a face at the start vertex of word[position], between
/// word[position - 1] (incoming) and word[position] (outgoing).
using Wedge = Occurrence;

class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PolygonalComplex {
 public:
  PolygonalComplex() = default;

  /// Validates and builds the derived structure. Throws ComplexError for
  /// dangling references, non-manifold edges, inconsistent orientation,
  /// faces that are not closed walks, or non-manifold vertices.
  static PolygonalComplex create(int vertex_count, std::vector<Edge> edges, std::vector<Face> faces);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const { return faces_.at(static_cast<std::size_t>(f)); }

  int use_start(EdgeUse u) const { return u.sign > 0 ? edge(u.edge).source : edge(u.edge).target; }
  int use_end(EdgeUse u) const { return u.sign > 0 ? edge(u.edge).target : edge(u.edge).source; }
  EdgeUse use_at(Occurrence o) const;
  int wedge_vertex(Wedge w) const { return use_start(use_at(w)); }
  EdgeUse incoming_at(Wedge w) const;

  /// Occurrences of an edge in face words (one or two).
  const std::vector<Occurrence>& occurrences(int e) const { return occurrences_.at(static_cast<std::size_t>(e)); }
  /// The other occurrence of the same edge, absent for boundary edges.
  std::optional<Occurrence> partner(Occurrence o) const;
  /// The face containing the given signed use (the face on its left).
  std::optional<Occurrence> occurrence_of(EdgeUse u) const;

  /// Wedges around a vertex in rotational order. For boundary vertices the
  /// sequence starts right after a boundary edge and ends before one.
  const std::vector<Wedge>& rotation(int v) const { return rotations_.at(static_cast<std::size_t>(v)); }
  bool is_boundary_vertex(int v) const { return boundary_vertex_.at(static_cast<std::size_t>(v)); }
  bool is_boundary_edge(int e) const { return occurrences(e).size() == 1; }

  /// Boundary circles as cyclic sequences of boundary edge uses, traversed
  /// with the surface on the left.
  const std::vector<std::vector<EdgeUse>>& boundary_circles() const { return boundary_circles_; }

  int euler_characteristic() const { return vertex_count_ - edge_count() + face_count(); }

  struct ComponentInfo {
    std::vector<int> faces;
    int euler_characteristic = 0;
    int boundary_circles = 0;
    int genus = 0;
  };
  /// Connected components with their classification (chi = 2 - 2g - b).
  const std::vector<ComponentInfo>& components() const { return components_; }
  int component_of_face(int f) const { return face_component_.at(static_cast<std::size_t>(f)); }
  int component_of_vertex(int v) const;

  /// Inserts a degree-2 vertex in the middle of an edge. The first half keeps
  /// the old id; the second half gets id edge_count().
  PolygonalComplex subdivide(int e) const;

  /// Cellular coboundaries: delta0 is E x V (g -> g(target) - g(source)),
  /// delta1 is F x E (c -> sum of signed values around each face).
  IntMatrix coboundary0() const;
  IntMatrix coboundary1() const;

 private:
  void build();

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<std::vector<Occurrence>> occurrences_;
  std::vector<std::vector<Wedge>> rotations_;
  std::vector<bool> boundary_vertex_;
  std::vector<std::vector<EdgeUse>> boundary_circles_;
  std::vector<ComponentInfo> components_;
  std::vector<int> face_component_;
};

/// H_1(c, rel) computed from cellular chains, where rel is a union of full
/// boundary circles (given as boundary edge ids). Optional extra 1-cycles
/// (edge-use lists) are quotiented out as well. Throws ComplexError if rel
/// is not closed under boundary circles.
AbelianGroupPresentation homology_pair(const PolygonalComplex& c, const std::vector<int>& rel_edges,
                                       const std::vector<std::vector<EdgeUse>>& extra_cycles = {});

/// Convenience: every boundary edge.
std::vector<int> all_boundary_edges(const PolygonalComplex& c);

}  // namespace floersut
