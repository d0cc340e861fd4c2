#pragma once

// Text formats.
//
// .sfd: line oriented, '#' starts a comment. Section headers stand alone on a
// line. Names are any tokens without ':' and are mapped to dense ids in order
// of declaration.
//
//   VERTICES            names, whitespace separated, any number of lines
//   EDGES               name source target kind   (alpha|beta|boundary|aux)
//   FACES               name : +e -e ...          (counterclockwise word)
//   BOUNDARY            genus G / circles B       (optional, checked)
//   ALPHA, BETA         name : +e -e ...          (closed edge cycles)
//   OMEGA               name : +e -e ...          (dual crossings)
//   PATCH               P : faces / A : edges / B : edges
//
// .grid: "n N", "X: c1 ... cN", "O: c1 ... cN" with 1-based rows per column.

#include "floersut/decomposition.hpp"
#include "floersut/diagram.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace floersut {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

struct NamedCycle {
  std::string name;
  DualCycle cycle;
};

struct PatchSpec {
  std::vector<int> p_faces;
  std::vector<int> a_edges;
  std::vector<int> b_edges;
};

struct SfdNames {
  std::vector<std::string> vertices, edges, faces, alphas, betas;
};

struct SfdFile {
  SuturedDiagram diagram;
  std::vector<NamedCycle> omegas;
  std::optional<PatchSpec> patch;
  SfdNames names;

  SurfaceDiagramP surface_diagram() const;
  /// Index of the named cycle, or -1.
  int find_omega(const std::string& name) const;
};

SfdFile parse_sfd(std::istream& in, const std::string& source = "<input>");
SfdFile load_sfd(const std::string& path);
/// Writes with the stored names, generating v0/e0/f0 style names where absent.
void write_sfd(std::ostream& out, const SfdFile& file);

GridSpec parse_grid(std::istream& in, const std::string& source = "<input>");
GridSpec load_grid(const std::string& path);
void write_grid(std::ostream& out, const GridSpec& g);

/// Parses a crossing list such as "+e1 -e4" against edge names.
DualCycle parse_cycle(const std::string& text, const SfdFile& file);

}  // namespace floersut
