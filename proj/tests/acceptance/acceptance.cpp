// One line per acceptance criterion; exit status 1 if any fails.

#include "floersut/exterior.hpp"
#include "floersut/io.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace floersut;

namespace {

std::string example(const std::string& name) { return std::string(FLOERSUT_EXAMPLES_DIR) + "/" + name; }

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "; first failure: " << why;
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

using Criterion = std::function<void(Outcome&)>;

std::size_t rank_of(const SuturedDiagram& d, int threads = 1) { return chain_complex(d, threads).homology.total_rank(); }

struct Bundled {
  std::string name;
  SfdFile file;
};

std::vector<Bundled> bundled() {
  std::vector<Bundled> out;
  for (const char* n : {"y1.sfd", "y2.sfd", "y1_cut.sfd", "lens6.sfd"}) out.push_back({n, load_sfd(example(n))});
  for (const char* n : {"grid_unknot2.grid", "grid_trefoil5.grid", "grid_hopf4.grid", "grid_unlink4.grid"}) {
    SfdFile f;
    f.diagram = grid_to_diagram(load_grid(example(n))).diagram;
    out.push_back({n, std::move(f)});
  }
  return out;
}

// 1. Y_n ranks.
void yn_ranks(Outcome& o) {
  for (int n = 1; n <= 6; ++n) {
    const auto t = std::chrono::steady_clock::now();
    const std::size_t rank = rank_of(build_yn_diagram(n).diagram);
    const double s = seconds_since(t);
    o.require(rank == (std::size_t{1} << n), "Y_" + std::to_string(n) + " rank " + std::to_string(rank));
    if (n == 6) {
      o.detail << "Y_6 rank " << rank << " in " << s << " s";
      o.require(s < 5.0, "Y_6 took " + std::to_string(s) + " s");
    }
  }
}

// 2. Y_n module structure against the exterior algebra.
void yn_module(Outcome& o) {
  std::size_t subsets = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto y = build_yn_diagram(n);
    const SFHModule m = module_structure(y.diagram, y.omegas);
    const auto cmp = compare_module(m, n);
    subsets += cmp.subset_ranks.size();
    o.require(cmp.subset_ranks.size() == (std::size_t{1} << n), "missing subsets at n=" + std::to_string(n));
    o.require(cmp.ranks_match, "composite ranks differ at n=" + std::to_string(n));
    o.require(cmp.isomorphism_found, "no module isomorphism at n=" + std::to_string(n));
    o.require(kernel_intersection(n).size() == 1, "exterior kernel intersection at n=" + std::to_string(n));
    // Common kernel of the actions on homology.
    const std::size_t r = m.homology.total_rank();
    SparseGf2Map stacked(r * m.action.size(), r);
    for (std::size_t i = 0; i < m.action.size(); ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k : m.action[i].column(j)) stacked.toggle(i * r + k, j);
    o.require(r - map_rank(stacked) == 1, "SFH kernel intersection at n=" + std::to_string(n));
  }
  o.detail << subsets << " subset ranks checked for n <= 4";
}

// 6. Grid ranks and runtime; 7. floor comparison.
void grid_ranks(Outcome& o) {
  const std::pair<const char*, std::size_t> expected[] = {
      {"grid_unknot2.grid", 2}, {"grid_trefoil5.grid", 48}, {"grid_hopf4.grid", 16}};
  for (const auto& [name, want] : expected) {
    const auto t = std::chrono::steady_clock::now();
    const std::size_t rank = rank_of(grid_to_diagram(load_grid(example(name))).diagram);
    const double s = seconds_since(t);
    o.detail << (o.detail.tellp() > 0 ? ", " : "") << name << " " << rank;
    o.require(rank == want, std::string(name) + " rank " + std::to_string(rank));
    o.require(s <= 60.0, std::string(name) + " took " + std::to_string(s) + " s");
  }
}

void grid_floor(Outcome& o) {
  const auto unlink = load_grid(example("grid_unlink4.grid"));
  const auto trefoil = load_grid(example("grid_trefoil5.grid"));
  const std::size_t ru = rank_of(grid_to_diagram(unlink).diagram);
  const std::size_t rt = rank_of(grid_to_diagram(trefoil).diagram);
  const std::size_t fu = std::size_t{1} << (unlink.n - 1), ft = std::size_t{1} << (trefoil.n - 1);
  o.detail << "unlink " << ru << " vs floor " << fu << ", trefoil " << rt << " vs floor " << ft;
  o.require(unlink.components() == 2, "unlink grid is not a 2-component link");
  o.require(ru == 2 * (std::size_t{1} << (unlink.n - 2)) && ru == fu, "unlink does not meet the floor");
  o.require(rt > ft, "trefoil does not exceed the floor");
}

}  // namespace

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

GridSpec random_grid(Rng& rng, int n) {
  GridSpec g;
  g.n = n;
  g.xs.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.xs[static_cast<std::size_t>(i)] = i;
  std::shuffle(g.xs.begin(), g.xs.end(), rng);
  g.os = g.xs;
  for (bool ok = false; !ok;) {
    std::shuffle(g.os.begin(), g.os.end(), rng);
    ok = true;
    for (int i = 0; i < n; ++i) ok = ok && g.os[static_cast<std::size_t>(i)] != g.xs[static_cast<std::size_t>(i)];
  }
  return g;
}

// Patches whose corners are all marked and which enclose no other marks.
std::vector<GridPatch> valid_patches(const GridSpec& g) {
  std::vector<GridPatch> out;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) {
      if (a == b) continue;
      const int r1 = g.xs[static_cast<std::size_t>(a)], r2 = g.os[static_cast<std::size_t>(a)];
      const int s1 = g.xs[static_cast<std::size_t>(b)], s2 = g.os[static_cast<std::size_t>(b)];
      if (!((r1 == s1 && r2 == s2) || (r1 == s2 && r2 == s1))) continue;
      for (auto [p, q] : {std::pair{r1, r2}, std::pair{r2, r1}}) {
        try {
          grid_to_diagram(g, GridPatch{a, b, p, q});
          out.push_back({a, b, p, q});
        } catch (const DiagramError&) {
        }
      }
    }
  return out;
}

SuturedDiagram subdivide_randomly(SuturedDiagram d, Rng& rng, int count) {
  for (int k = 0; k < count; ++k) d = d.subdivide(uniform(rng, 0, d.surface().edge_count() - 1));
  return d;
}

// Free basis, a few vertex loops and random integer combinations of both.
std::vector<DualCycle> random_cycles(const SuturedDiagram& d, Rng& rng, int extra) {
  std::vector<DualCycle> out = relative_h1(d).free_basis;
  const int nv = d.surface().vertex_count();
  const std::size_t e = static_cast<std::size_t>(d.surface().edge_count());
  for (int k = 0; k < extra; ++k) {
    IntVector c(e);
    auto add = [&](const DualCycle& w, int times) {
      const auto cw = d.cochain(w);
      for (std::size_t i = 0; i < e; ++i) c[i] += cw[i] * times;
    };
    for (std::size_t b = 0; b < out.size() && b < 4; ++b) add(out[b], uniform(rng, -2, 2));
    for (int j = 0; j < 3; ++j) add(d.vertex_loop(uniform(rng, 0, nv - 1)), uniform(rng, -1, 1));
    out.push_back(d.cycle_from_cochain(c));
  }
  return out;
}

struct Fuzzed {
  std::string label;
  SuturedDiagram diagram;
};

Fuzzed random_diagram(Rng& rng, int i) {
  switch (i % 4) {
    case 0: {
      const auto g = random_grid(rng, uniform(rng, 2, 5));
      return {"grid", grid_to_diagram(g).diagram};
    }
    case 1:
      return {"Y_n subdivided", subdivide_randomly(build_yn_diagram(uniform(rng, 1, 3)).diagram, rng, uniform(rng, 1, 5))};
    case 2: {
      const auto g = random_grid(rng, uniform(rng, 2, 3));
      return {"union", disjoint_union(build_yn_diagram(uniform(rng, 1, 2)).diagram, grid_to_diagram(g).diagram)};
    }
    default: {
      for (;;) {
        const auto g = random_grid(rng, uniform(rng, 4, 5));
        const auto patches = valid_patches(g);
        if (patches.empty()) continue;
        const auto& p = patches[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(patches.size()) - 1))];
        return {"patched grid", grid_to_diagram(g, p).diagram};
      }
    }
  }
}

bool preserves_classes(const SparseGf2Map& a, const SpincPartition& s) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i : a.column(j))
      if (s.class_of[i] != s.class_of[j]) return false;
  return true;
}

// Chain-level identities for one diagram and a set of cycles.
void check_identities(const SuturedDiagram& d, const std::vector<DualCycle>& cycles, Outcome& o,
                      const std::string& label, std::size_t& maps) {
  const SFHModule m = chain_complex(d);
  o.require((m.differential * m.differential).is_zero(), label + ": d^2 != 0");
  std::vector<SparseGf2Map> on_homology;
  for (const auto& w : cycles) {
    const auto a = action_matrix(d, m.generators.size(), m.disks, w);
    ++maps;
    o.require(a * m.differential == m.differential * a, label + ": A d + d A != 0");
    o.require(preserves_classes(a, m.spinc), label + ": A leaves a Spin^c block");
    try {
      on_homology.push_back(induced_map(a, m.homology, m.homology));
    } catch (const HomologyError& e) {
      o.fail(label + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < on_homology.size(); ++i) {
    o.require((on_homology[i] * on_homology[i]).is_zero(), label + ": A^2 != 0 on homology");
    for (std::size_t j = i + 1; j < on_homology.size(); ++j)
      o.require((on_homology[i] * on_homology[j] + on_homology[j] * on_homology[i]).is_zero(),
                label + ": actions do not anticommute");
  }
}

// 3. Chain-level identities on bundled and fuzzed diagrams.
void chain_identities(Outcome& o) {
  Rng rng(20261017);
  std::size_t maps = 0, diagrams = 0;
  for (const auto& b : bundled()) {
    auto cycles = random_cycles(b.file.diagram, rng, 3);
    for (const auto& w : b.file.omegas) cycles.push_back(w.cycle);
    check_identities(b.file.diagram, cycles, o, b.name, maps);
    ++diagrams;
  }
  int fuzzed = 0;
  for (int i = 0; fuzzed < 120; ++i) {
    const auto f = random_diagram(rng, i);
    if (!validate_diagram(f.diagram).ok()) {
      o.fail("generated " + f.label + " diagram is invalid");
      continue;
    }
    check_identities(f.diagram, random_cycles(f.diagram, rng, 2), o, f.label + " #" + std::to_string(i), maps);
    ++fuzzed;
  }
  o.detail << diagrams << " bundled + " << fuzzed << " fuzzed diagrams, " << maps << " action maps";
}

}  // namespace

namespace {

// 4. Homotopy witnesses for homologous pairs.
void homotopy_pairs(Outcome& o) {
  Rng rng(4);
  std::size_t pairs = 0, witnesses = 0, even = 0, nonzero_h = 0, odd_torsion = 0;
  for (const auto& b : bundled()) {
    const auto& d = b.file.diagram;
    const SFHModule cx = chain_complex(d);
    const IntMatrix ka = cocycles_vanishing_on(d, EdgeKind::alpha);
    const IntMatrix kb = cocycles_vanishing_on(d, EdgeKind::beta);
    const RelativeHomology h1 = relative_h1(d);
    std::vector<DualCycle> bases = h1.free_basis;
    // With no free part every cycle is homologous mod torsion to every other.
    if (h1.h1_m_boundary.free_rank == 0) {
      const IntMatrix z = kernel_basis(smith_normal_form(d.surface().coboundary1()));
      for (std::size_t j = 0; j < z.cols(); ++j) {
        IntVector c(z.rows());
        for (std::size_t i = 0; i < z.rows(); ++i) c[i] = z(i, j);
        bases.push_back(d.cycle_from_cochain(c));
      }
    }
    for (const auto& w : b.file.omegas) bases.push_back(w.cycle);
    bases.push_back(DualCycle{});
    const std::size_t e = static_cast<std::size_t>(d.surface().edge_count());
    const int nv = d.surface().vertex_count();
    int done = 0;
    for (int k = 0; done < 24; ++k) {
      const DualCycle& w1 = bases[static_cast<std::size_t>(k) % bases.size()];
      IntVector c = d.cochain(w1);
      if (h1.h1_m_boundary.free_rank == 0) {
        for (const auto& base : bases) {
          const auto bc = d.cochain(base);
          const int t = uniform(rng, -3, 3);
          for (std::size_t i = 0; i < e; ++i) c[i] += bc[i] * t;
        }
      }
      auto add_column = [&](const IntMatrix& m) {
        if (m.cols() == 0) return;
        const std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(m.cols()) - 1));
        const int t = uniform(rng, -1, 1);
        for (std::size_t i = 0; i < e; ++i) c[i] += m(i, j) * t;
      };
      // Face-loop perturbation around random vertices, then xi/eta moves.
      for (int j = 0; j < 2; ++j) {
        const auto loop = d.cochain(d.vertex_loop(uniform(rng, 0, nv - 1)));
        const int t = uniform(rng, -2, 2);
        for (std::size_t i = 0; i < e; ++i) c[i] += loop[i] * t;
      }
      if (k % 2 == 0) add_column(ka);
      if (k % 3 == 0) add_column(kb);
      const DualCycle w2 = d.cycle_from_cochain(c);
      const std::string label = b.name + " pair " + std::to_string(done);
      try {
        const auto r = homotopy_witness(d, cx, w1, w2);
        if (r.witness) {
          ++witnesses;
          if (std::find(r.witness->h.begin(), r.witness->h.end(), true) != r.witness->h.end()) ++nonzero_h;
          if (r.witness->m > 1) ++odd_torsion;
          o.require(r.witness->identity_holds, label + ": A1 + A2 != dH + Hd");
          o.require(r.witness->disk_relation_holds, label + ": disk divisibility fails");
        } else {
          ++even;
          o.require(r.induced_maps_equal, label + ": induced maps differ");
        }
      } catch (const std::exception& ex) {
        o.fail(label + ": " + ex.what());
      }
      ++pairs;
      ++done;
    }
  }
  o.detail << pairs << " pairs over " << bundled().size() << " bundled diagrams, " << witnesses << " witnesses (" << nonzero_h
           << " with nonzero H, " << odd_torsion << " with m > 1), " << even << " certified on homology";
}

void theorem1_on(const SurfaceDiagramP& sd, const DualCycle& w, Outcome& o, const std::string& label) {
  const auto r = check_theorem1(sd, w);
  if (!r.all_green()) o.fail(label + ": " + (r.failures.empty() ? "not green" : r.failures.front()));
}

// 5. Decomposition harness.
void theorem1(Outcome& o) {
  Rng rng(5);
  const auto cut = load_sfd(example("y1_cut.sfd"));
  const auto sd = cut.surface_diagram();
  for (const auto& w : cut.omegas) theorem1_on(sd, w.cycle, o, "y1_cut " + w.name);
  for (const auto& w : random_cycles(cut.diagram, rng, 3)) theorem1_on(sd, w, o, "y1_cut random");

  std::size_t patches = 0, runs = 0;
  std::set<std::pair<bool, bool>> orientations;
  std::set<int> sizes;
  for (int i = 0; patches < 24; ++i) {
    const int n = i % 6 == 0 ? 2 : uniform(rng, 4, 5);
    const auto g = random_grid(rng, n);
    const auto valid = valid_patches(g);
    if (valid.empty()) continue;
    const auto p = valid[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(valid.size()) - 1))];
    const auto gd = grid_to_diagram(g, p);
    const SurfaceDiagramP psd{gd.diagram, gd.patch_faces, gd.a_edges, gd.b_edges};
    for (const auto& w : random_cycles(gd.diagram, rng, 2)) {
      theorem1_on(psd, w, o, "grid n=" + std::to_string(n) + " patch " + std::to_string(patches));
      ++runs;
    }
    orientations.insert({p.col_a < p.col_b, p.row_1 < p.row_2});
    sizes.insert(n);
    ++patches;
  }
  o.require(orientations.size() == 4, "not every patch orientation was drawn");
  o.detail << "y1_cut + " << patches << " random grid patches (" << runs << " runs, " << orientations.size()
           << " orientations, n in {";
  for (int s : sizes) o.detail << (s == *sizes.begin() ? "" : ",") << s;
  o.detail << "})";
}

// 8. Subdivision invariance.
void refinement(Outcome& o) {
  Rng rng(8);
  std::size_t checked = 0;
  for (const auto& b : bundled()) {
    const auto& d = b.file.diagram;
    std::vector<DualCycle> cycles = relative_h1(d).free_basis;
    for (const auto& w : b.file.omegas) cycles.push_back(w.cycle);
    const SFHModule before = module_structure(d, cycles);
    // Old edges keep their ids, so the cycles carry over unchanged.
    const SuturedDiagram fine = subdivide_randomly(d, rng, 10);
    const SFHModule after = module_structure(fine, cycles);
    const std::string label = b.name;
    o.require(after.generators.generators == before.generators.generators, label + ": generators changed");
    o.require(after.differential == before.differential, label + ": differential changed");
    o.require(after.homology.class_ranks() == before.homology.class_ranks(), label + ": class ranks changed");
    o.require(after.chain_actions == before.chain_actions, label + ": chain-level action changed");
    o.require(after.action == before.action, label + ": action on homology changed");
    checked += cycles.size();
  }
  o.detail << "10 random subdivisions on each of " << bundled().size() << " bundled diagrams, " << checked << " action maps compared";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"Y_n ranks 2^n for n <= 6", yn_ranks},
      {"Y_n module structure matches the exterior algebra", yn_module},
      {"chain-level identities on bundled and fuzzed diagrams", chain_identities},
      {"homotopy witnesses for homologous pairs", homotopy_pairs},
      {"decomposition harness all green", theorem1},
      {"grid ranks 2, 48, 16", grid_ranks},
      {"unlink meets the 2^(n-1) floor, trefoil exceeds it", grid_floor},
      {"subdivision invariance", refinement},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
              << o.detail.str() << "] (" << seconds_since(t) << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
