#include "doctest.h"
#include "floersut/homology.hpp"
#include "floersut/io.hpp"

#include <sstream>

using namespace floersut;

namespace {

std::string path(const std::string& name) { return std::string(FLOERSUT_EXAMPLES_DIR) + "/" + name; }

SfdFile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_sfd(in, "test");
}

const char* kDisk = R"(VERTICES
a b c
EDGES
x a b boundary
y b c boundary
z c a boundary
FACES
F : +x +y +z
ALPHA
BETA
)";

int error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("bundled diagrams parse and match the builder") {
  for (int n : {1, 2}) {
    auto f = load_sfd(path("y" + std::to_string(n) + ".sfd"));
    auto y = build_yn_diagram(n);
    CHECK(f.diagram.surface().euler_characteristic() == y.diagram.surface().euler_characteristic());
    CHECK(f.omegas.size() == static_cast<std::size_t>(n));
    CHECK(validate_diagram(f.diagram).ok());
    CHECK(module_structure(f.diagram).homology.total_rank() == (std::size_t{1} << n));
  }
}

TEST_CASE("write then parse reproduces the file") {
  for (const char* name : {"y1.sfd", "y2.sfd", "y1_cut.sfd"}) {
    auto f = load_sfd(path(name));
    std::ostringstream first;
    write_sfd(first, f);
    auto g = parse(first.str());
    std::ostringstream second;
    write_sfd(second, g);
    CHECK(first.str() == second.str());
    CHECK(g.names.edges == f.names.edges);
    CHECK(g.patch.has_value() == f.patch.has_value());
  }
}

TEST_CASE("y1_cut carries a valid patch") {
  auto f = load_sfd(path("y1_cut.sfd"));
  REQUIRE(f.patch);
  auto sd = f.surface_diagram();
  CHECK(check_surface_diagram(sd).empty());
  CHECK(validate_diagram(decompose(sd).diagram).ok());
  const int thread = f.find_omega("thread");
  REQUIRE(thread >= 0);
  auto pushed = push_off_b(sd, f.omegas[static_cast<std::size_t>(thread)].cycle);
  for (int e : sd.b_edges) CHECK(f.diagram.cochain_small(pushed)[static_cast<std::size_t>(e)] == 0);
  auto h = relative_h1(f.diagram);
  CHECK(class_of_cycle(f.diagram, h, pushed) == class_of_cycle(f.diagram, h, f.omegas[0].cycle));
  for (const auto& w : f.omegas) CHECK(check_theorem1(sd, w.cycle).all_green());
  CHECK(f.find_omega("missing") == -1);
}

TEST_CASE("disk without curves") {
  auto f = parse(kDisk);
  CHECK(f.diagram.surface().euler_characteristic() == 1);
  CHECK(f.diagram.surface().boundary_circles().size() == 1);
  CHECK(parse(std::string(kDisk) + "BOUNDARY\ngenus 0\ncircles 1\n").diagram.surface().face_count() == 1);
}

TEST_CASE("malformed sfd input reports the line") {
  CHECK(error_line(std::string(kDisk) + "BOUNDARY\ncircles 2\n") == 12);
  CHECK(error_line("junk\n") == 1);
  CHECK(error_line("VERTICES\na a\n") == 2);
  CHECK(error_line("VERTICES\na b\nEDGES\nx a c boundary\n") == 4);
  CHECK(error_line("VERTICES\na b\nEDGES\nx a b widget\n") == 4);
  CHECK(error_line("VERTICES\na\nEDGES\nx a a boundary\nFACES\nF : x\n") == 6);
  CHECK(error_line("VERTICES\nVERTICES\n") == 2);
  CHECK(error_line("VERTICES\na\n") == 0);
  std::string bad_patch = kDisk;
  bad_patch += "PATCH\nQ : F\n";
  CHECK(error_line(bad_patch) == 12);
  std::string open_face = "VERTICES\na b\nEDGES\nx a b boundary\nFACES\nF : +x\nALPHA\nBETA\n";
  CHECK_THROWS_AS(parse(open_face), ParseError);
}

TEST_CASE("cycle strings") {
  auto f = load_sfd(path("y1.sfd"));
  auto c = parse_cycle(f.names.edges.empty() ? "" : "+e1 +e3", f);
  CHECK(f.diagram.cochain(c) == f.diagram.cochain(f.omegas[0].cycle));
  CHECK_THROWS_AS(parse_cycle("+e1", f), DiagramError);
  CHECK_THROWS_AS(parse_cycle("+nope", f), ParseError);
  CHECK_THROWS_AS(parse_cycle("e1", f), ParseError);
}

TEST_CASE("grid files") {
  auto g = load_grid(path("grid_trefoil5.grid"));
  CHECK(g.n == 5);
  CHECK(g.xs == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(g.os == std::vector<int>{3, 4, 0, 1, 2});
  std::ostringstream out;
  write_grid(out, g);
  std::istringstream in(out.str());
  auto h = parse_grid(in);
  CHECK(h.xs == g.xs);
  CHECK(h.os == g.os);
  CHECK(load_grid(path("grid_unlink4.grid")).components() == 2);
  CHECK(load_grid(path("grid_hopf4.grid")).components() == 2);
  CHECK(load_grid(path("grid_unknot2.grid")).components() == 1);
  auto bad = [](const std::string& text) {
    std::istringstream is(text);
    return parse_grid(is);
  };
  CHECK_THROWS_AS(bad("n 2\nX: 1 2\n"), ParseError);
  CHECK_THROWS_AS(bad("n 2\nX: 1 2\nO: 1 2\n"), ParseError);
  CHECK_THROWS_AS(bad("n 2\nX: 1 x\nO: 2 1\n"), ParseError);
  CHECK_THROWS_AS(bad("n 2\nX: 1 2 3\nO: 2 1\n"), ParseError);
  CHECK_THROWS_AS(bad("size 2\n"), ParseError);
  CHECK_THROWS_AS(load_grid(path("missing.grid")), ParseError);
}
