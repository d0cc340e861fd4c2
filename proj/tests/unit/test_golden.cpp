#include "doctest.h"
#include "floersut/report.hpp"

#include <fstream>
#include <sstream>

using namespace floersut;

namespace {

std::string example(const std::string& name) { return std::string(FLOERSUT_EXAMPLES_DIR) + "/" + name; }

std::string golden(const std::string& name) {
  std::ifstream in(std::string(FLOERSUT_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dumped(const Json& r) { return r.dump(2) + "\n"; }

}  // namespace

TEST_CASE("reports match golden files") {
  const auto y1 = load_sfd(example("y1.sfd"));
  const auto y2 = load_sfd(example("y2.sfd"));
  CHECK(dumped(compute_report(y1, "examples/y1.sfd")) == golden("compute_y1.json"));
  CHECK(dumped(compute_report(y2, "examples/y2.sfd")) == golden("compute_y2.json"));
  for (const char* g : {"unknot2", "trefoil5", "hopf4", "unlink4"}) {
    const std::string rel = std::string("examples/grid_") + g + ".grid";
    CHECK(dumped(grid_report(load_grid(example(std::string("grid_") + g + ".grid")), rel)) ==
          golden(std::string("grid_") + g + ".json"));
  }
  CHECK(dumped(action_report(y1, "examples/y1.sfd", {})) == golden("action_y1.json"));
  CHECK(dumped(action_report(y2, "examples/y2.sfd", {})) == golden("action_y2.json"));
  const auto trefoil = grid_file(load_grid(example("grid_trefoil5.grid")));
  CHECK(dumped(action_report(trefoil, "examples/grid_trefoil5.grid", {})) == golden("action_trefoil5.json"));
  CHECK(dumped(decompose_report(load_sfd(example("y1_cut.sfd")), "examples/y1_cut.sfd", {})) ==
        golden("decompose_y1_cut.json"));
  const NamedCycle plain{"+e1 +e3", parse_cycle("+e1 +e3", y1)};
  CHECK(dumped(homotopy_report(y1, "examples/y1.sfd", y1.omegas[0], plain)) == golden("homotopy_y1.json"));
}

TEST_CASE("reports do not depend on the thread count") {
  const auto g = load_grid(example("grid_hopf4.grid"));
  const auto one = grid_report(g, "x", 1).dump();
  CHECK(grid_report(g, "x", 3).dump() == one);
  CHECK(grid_report(g, "x", 8).dump() == one);
}

TEST_CASE("report contents") {
  const auto y1 = load_sfd(example("y1.sfd"));
  auto r = compute_report(y1, "y1");
  CHECK(r["schema"] == 1);
  CHECK(r["homology"]["total_rank"] == 2);
  CHECK(render_text(r).find("rank 2; classes: 1 class of rank 2") != std::string::npos);

  auto a = action_report(grid_file(load_grid(example("grid_trefoil5.grid"))), "t", {});
  CHECK(a["h1_rank"] == 0);
  CHECK(a["note"] == "action trivial");

  auto y2 = load_sfd(example("y2.sfd"));
  auto differ = homotopy_report(y2, "y2", y2.omegas[0], y2.omegas[1]);
  CHECK(differ["same_class"] == false);
  CHECK(differ["ok"] == false);

  // Empty patch is trivially all green.
  auto with_empty = y1;
  with_empty.patch = PatchSpec{};
  auto d = decompose_report(with_empty, "y1", {});
  CHECK(d["ok"] == true);
  CHECK(d["outer_generators"] == d["base_generators"]);
  CHECK(decompose_report(y1, "y1", {})["ok"] == false);
}
