// floersut: sutured Floer homology of nice diagrams over GF(2).

#include "floersut/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace floersut;

namespace {

constexpr int kUsage = 1;
constexpr int kFailure = 2;

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

SfdFile load_any(const std::string& path) {
  return ends_with(path, ".grid") ? grid_file(load_grid(path)) : load_sfd(path);
}

// A selector is the name of a cycle in the file or a crossing list "+e1 -e2".
NamedCycle select_cycle(const SfdFile& f, const std::string& selector) {
  const int i = f.find_omega(selector);
  if (i >= 0) return f.omegas[static_cast<std::size_t>(i)];
  if (!selector.empty() && selector[0] != '+' && selector[0] != '-')
    throw ParseError("<selector>", 0, "no cycle named '" + selector + "'");
  return {selector, parse_cycle(selector, f)};
}

std::vector<NamedCycle> select_cycles(const SfdFile& f, const std::vector<std::string>& selectors) {
  std::vector<NamedCycle> out;
  for (const auto& s : selectors) out.push_back(select_cycle(f, s));
  return out;
}

int emit(const Json& report, bool json) {
  if (json)
    std::cout << report.dump(2) << '\n';
  else
    std::cout << render_text(report);
  return report.value("ok", false) ? 0 : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sutured Floer homology of nice diagrams over GF(2)", "floersut"};
  app.require_subcommand(1);
  bool json = false;
  int threads = default_thread_count();
  app.add_flag("--json", json, "Print the JSON report");
  app.add_option("--threads", threads, "Worker threads (default FLOERSUT_THREADS or 1)")->check(CLI::PositiveNumber);

  std::string path;
  auto* compute = app.add_subcommand("compute", "Validate a diagram and compute SFH ranks per Spin^c class");
  compute->add_option("file", path, ".sfd or .grid file")->required();

  bool basis = false;
  std::vector<std::string> selectors;
  auto* action = app.add_subcommand("action", "Action of H_1(M, dM)/Tors on SFH");
  action->add_option("file", path, ".sfd or .grid file")->required();
  action->add_flag("--basis", basis, "Use the free basis of H_1(M, dM)/Tors");
  action->add_option("--omega", selectors, "Cycle name or crossing list, repeatable");

  auto* decomp = app.add_subcommand("decompose", "Check a surface decomposition given by a PATCH section");
  decomp->add_option("file", path, ".sfd file with PATCH")->required();
  decomp->add_option("--omega", selectors, "Cycle name or crossing list, repeatable");

  std::string first, second;
  bool assert_equal = false;
  auto* homotopy = app.add_subcommand("homotopy", "Chain homotopy between the actions of two cycles");
  homotopy->add_option("file", path, ".sfd file")->required();
  homotopy->add_option("omega1", first, "Cycle name or crossing list")->required();
  homotopy->add_option("omega2", second, "Cycle name or crossing list")->required();
  homotopy->add_flag("--assert-equal", assert_equal, "Fail when the classes differ");

  auto* grid = app.add_subcommand("grid", "Grid diagram ranks against the 2^(n-1) floor");
  grid->add_option("file", path, ".grid file")->required();

  for (auto* sub : {compute, action, decomp, homotopy, grid}) {
    sub->add_flag("--json", json, "Print the JSON report");
    sub->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*compute) return emit(compute_report(load_any(path), path, threads), json);
    if (*grid) return emit(grid_report(load_grid(path), path, threads), json);
    const SfdFile file = load_any(path);
    if (*action) {
      auto cycles = select_cycles(file, selectors);
      if (cycles.empty() && !basis) cycles = file.omegas;
      return emit(action_report(file, path, cycles, threads), json);
    }
    if (*decomp) return emit(decompose_report(file, path, select_cycles(file, selectors), threads), json);
    if (*homotopy) {
      const Json r = homotopy_report(file, path, select_cycle(file, first), select_cycle(file, second), threads);
      const int code = emit(r, json);
      if (!r.value("same_class", true)) return assert_equal ? kFailure : 0;
      return code;
    }
  } catch (const ParseError& e) {
    std::cerr << "floersut: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "floersut: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
