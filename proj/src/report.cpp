#include "floersut/report.hpp"

#include "floersut/exterior.hpp"

#include <limits>
#include <map>
#include <sstream>

namespace floersut {

namespace {

Json big(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

Json matrix_rows(const SparseGf2Map& m) {
  std::vector<std::vector<int>> rows(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i : m.column(j)) rows[i][j] = 1;
  return rows;
}

std::string edge_name(const SfdFile& f, int e) {
  return e < static_cast<int>(f.names.edges.size()) ? f.names.edges[static_cast<std::size_t>(e)]
                                                     : "e" + std::to_string(e);
}

std::string vertex_name(const SfdFile& f, int v) {
  return v < static_cast<int>(f.names.vertices.size()) ? f.names.vertices[static_cast<std::size_t>(v)]
                                                       : "v" + std::to_string(v);
}

std::string crossings(const SfdFile& f, const DualCycle& c) {
  std::string out;
  for (const auto& u : c.crossings) {
    if (!out.empty()) out += ' ';
    out += (u.sign > 0 ? '+' : '-') + edge_name(f, u.edge);
  }
  return out;
}

Json generator_json(const SfdFile& f, const Generator& x) {
  Json out = Json::array();
  for (int p : x) out.push_back(vertex_name(f, p));
  return out;
}

Json header(const char* command, const std::string& input) {
  return Json{{"schema", kReportSchema}, {"command", command}, {"input", input}};
}

Json validation_json(const ValidationReport& v) {
  Json out{{"balanced", v.balanced},
           {"every_component_has_boundary", v.every_component_has_boundary},
           {"nice", v.nice},
           {"admissible", v.admissible},
           {"ok", v.ok()}};
  if (v.non_nice_region) out["non_nice_region"] = *v.non_nice_region;
  if (v.periodic_witness) {
    Json w = Json::array();
    for (const auto& x : *v.periodic_witness) w.push_back(big(x));
    out["periodic_witness"] = w;
  }
  out["messages"] = v.messages;
  return out;
}

Json homology_json(const SFHModule& m) {
  Json classes = Json::array();
  for (std::size_t c = 0; c < m.spinc.class_count(); ++c) {
    Json label = Json::array();
    for (const auto& x : m.spinc.labels[c]) label.push_back(big(x));
    classes.push_back({{"label", label},
                       {"generators", m.spinc.members[c].size()},
                       {"rank", m.homology.class_ranks()[c]}});
  }
  return Json{{"generators", m.generators.size()},
              {"disks", m.disks.size()},
              {"spinc_classes", classes},
              {"total_rank", m.homology.total_rank()}};
}

std::vector<NamedCycle> basis_cycles(const SuturedDiagram& d) {
  std::vector<NamedCycle> out;
  const auto basis = relative_h1(d).free_basis;
  for (std::size_t i = 0; i < basis.size(); ++i) out.push_back({"zeta" + std::to_string(i + 1), basis[i]});
  return out;
}

}  // namespace

SfdFile grid_file(const GridSpec& g) {
  SfdFile f;
  f.diagram = grid_to_diagram(g).diagram;
  return f;
}

Json compute_report(const SfdFile& file, const std::string& input, int threads) {
  Json out = header("compute", input);
  const auto v = validate_diagram(file.diagram);
  out["validation"] = validation_json(v);
  out["ok"] = v.ok();
  if (!v.ok()) return out;
  const SFHModule m = chain_complex(file.diagram, threads);
  out["homology"] = homology_json(m);
  return out;
}

Json action_report(const SfdFile& file, const std::string& input, const std::vector<NamedCycle>& cycles,
                   int threads) {
  Json out = header("action", input);
  const auto v = validate_diagram(file.diagram);
  out["validation"] = validation_json(v);
  out["ok"] = v.ok();
  if (!v.ok()) return out;
  const auto rh = relative_h1(file.diagram);
  out["h1_rank"] = rh.h1_m_boundary.free_rank;
  const auto used = cycles.empty() ? basis_cycles(file.diagram) : cycles;
  std::vector<DualCycle> plain;
  for (const auto& c : used) plain.push_back(c.cycle);
  SFHModule m;
  try {
    m = module_structure(file.diagram, plain, threads);
  } catch (const HomologyError& e) {
    out["ok"] = false;
    out["error"] = e.what();
    return out;
  }
  out["homology"] = homology_json(m);
  Json actions = Json::array();
  for (std::size_t i = 0; i < m.action.size(); ++i) {
    Json cls = Json::array();
    for (const auto& x : class_of_cycle(file.diagram, rh, used[i].cycle)) cls.push_back(big(x));
    actions.push_back({{"name", used[i].name},
                       {"crossings", crossings(file, used[i].cycle)},
                       {"class", cls},
                       {"rank", map_rank(m.action[i])},
                       {"matrix", matrix_rows(m.action[i])}});
  }
  out["actions"] = actions;
  if (actions.empty()) out["note"] = "action trivial";
  Json props = Json::array();
  bool all = true;
  for (const auto& p : m.properties) {
    props.push_back({{"name", p.name}, {"passed", p.passed}});
    all = all && p.passed;
  }
  out["properties"] = props;
  out["ok"] = all;
  return out;
}

Json decompose_report(const SfdFile& file, const std::string& input, const std::vector<NamedCycle>& cycles,
                      int threads) {
  Json out = header("decompose", input);
  if (!file.patch) {
    out["ok"] = false;
    out["error"] = "no PATCH section";
    return out;
  }
  const auto sd = file.surface_diagram();
  const auto errors = check_surface_diagram(sd);
  out["surface_diagram_errors"] = errors;
  if (!errors.empty()) {
    out["ok"] = false;
    return out;
  }
  auto used = !cycles.empty() ? cycles : !file.omegas.empty() ? file.omegas : basis_cycles(file.diagram);
  if (used.empty()) used.push_back({"zero", DualCycle{}});
  const Decomposition dec = decompose(sd);
  out["euler"] = {{"sigma", file.diagram.surface().euler_characteristic()},
                  {"sigma_prime", dec.euler_new},
                  {"outside", dec.euler_outside},
                  {"patch_a", dec.euler_patch_a},
                  {"patch_b", dec.euler_patch_b},
                  {"gluing", dec.euler_gluing}};
  const auto v = validate_diagram(dec.diagram);
  out["new_diagram_validation"] = validation_json(v);
  if (v.ok()) out["new_homology"] = homology_json(chain_complex(dec.diagram, threads));
  bool all = v.ok();
  Json reports = Json::array();
  for (const auto& c : used) {
    const auto r = check_theorem1(sd, c.cycle, threads);
    all = all && r.all_green();
    out["outer_generators"] = r.outer_generator_count;
    out["base_generators"] = r.base_generator_count;
    reports.push_back({{"name", c.name},
                       {"crossings", crossings(file, c.cycle)},
                       {"pushed_off_b", crossings(file, push_off_b(sd, c.cycle))},
                       {"checks",
                        {{"surface_valid", r.surface_valid},
                         {"new_diagram_valid", r.new_diagram_valid},
                         {"bijection", r.bijection},
                         {"splitting", r.splitting},
                         {"disks_match", r.disks_match},
                         {"weights_match", r.weights_match},
                         {"inclusion_commutes", r.inclusion_commutes},
                         {"projection_commutes", r.projection_commutes},
                         {"projection_inclusion_identity", r.projection_inclusion_identity}}},
                       {"matched_disks", r.matched_disks},
                       {"all_green", r.all_green()},
                       {"failures", r.failures}});
  }
  out["cycles"] = reports;
  out["ok"] = all;
  return out;
}

Json homotopy_report(const SfdFile& file, const std::string& input, const NamedCycle& first,
                     const NamedCycle& second, int threads) {
  Json out = header("homotopy", input);
  const auto v = validate_diagram(file.diagram);
  out["validation"] = validation_json(v);
  out["ok"] = v.ok();
  if (!v.ok()) return out;
  const auto rh = relative_h1(file.diagram);
  Json classes = Json::array();
  for (const auto* c : {&first, &second}) {
    Json cls = Json::array();
    for (const auto& x : class_of_cycle(file.diagram, rh, c->cycle)) cls.push_back(big(x));
    classes.push_back({{"name", c->name}, {"crossings", crossings(file, c->cycle)}, {"class", cls}});
  }
  out["cycles"] = classes;
  const SFHModule cx = chain_complex(file.diagram, threads);
  HomotopyResult r;
  try {
    r = homotopy_witness(file.diagram, cx, first.cycle, second.cycle);
  } catch (const HomologyError&) {
    out["same_class"] = false;
    out["ok"] = false;
    out["message"] = "classes differ";
    return out;
  }
  out["same_class"] = true;
  out["torsion_order"] = big(r.torsion_order);
  out["induced_maps_equal"] = r.induced_maps_equal;
  if (r.witness) {
    const auto& w = *r.witness;
    Json support = Json::array();
    for (std::size_t p = 0; p < w.vertex_values.size(); ++p)
      if (w.vertex_values[p] != 0)
        support.push_back({{"vertex", vertex_name(file, static_cast<int>(p))}, {"value", big(w.vertex_values[p])}});
    Json h = Json::array();
    for (std::size_t g = 0; g < w.h.size(); ++g)
      if (w.h[g]) h.push_back(generator_json(file, cx.generators.generators[g]));
    out["witness"] = {{"m", big(w.m)},
                      {"b_support", support},
                      {"h_diagonal", h},
                      {"identity_holds", w.identity_holds},
                      {"disk_relation_holds", w.disk_relation_holds}};
    out["ok"] = w.identity_holds && w.disk_relation_holds && r.induced_maps_equal;
  } else {
    out["witness"] = nullptr;
    out["ok"] = r.induced_maps_equal;
  }
  return out;
}

Json grid_report(const GridSpec& g, const std::string& input, int threads) {
  Json out = compute_report(grid_file(g), input, threads);
  out["command"] = "grid";
  const std::size_t floor = std::size_t{1} << (g.n - 1);
  out["grid"] = {{"n", g.n}, {"components", g.components()}, {"floor", floor}};
  if (out.contains("homology")) {
    const std::size_t rank = out["homology"]["total_rank"];
    out["grid"]["rank_vs_floor"] = rank == floor ? "equal" : rank > floor ? "above" : "below";
  }
  return out;
}

std::string render_text(const Json& r) {
  std::ostringstream os;
  const std::string cmd = r.value("command", "");
  os << cmd << ": " << r.value("input", "") << '\n';
  if (r.contains("validation")) {
    const auto& v = r["validation"];
    os << "validation: balanced " << v["balanced"] << ", boundary " << v["every_component_has_boundary"] << ", nice "
       << v["nice"] << ", admissible " << v["admissible"] << '\n';
    for (const auto& m : v["messages"]) os << "  " << m.get<std::string>() << '\n';
  }
  if (r.contains("error")) os << "error: " << r["error"].get<std::string>() << '\n';
  auto homology = [&](const Json& h, const char* prefix) {
    const auto& cls = h["spinc_classes"];
    os << prefix << "generators " << h["generators"] << ", disks " << h["disks"] << '\n';
    std::map<std::size_t, std::size_t> by_rank;
    for (const auto& c : cls) ++by_rank[c["rank"].get<std::size_t>()];
    os << prefix << "rank " << h["total_rank"] << "; classes: ";
    bool first = true;
    for (auto it = by_rank.rbegin(); it != by_rank.rend(); ++it) {
      os << (first ? "" : ", ") << it->second << (it->second == 1 ? " class" : " classes") << " of rank " << it->first;
      first = false;
    }
    if (cls.empty()) os << "none";
    os << '\n';
  };
  if (r.contains("homology")) homology(r["homology"], "");
  if (cmd == "grid") {
    const auto& g = r["grid"];
    os << "grid n " << g["n"] << ", components " << g["components"] << ", floor " << g["floor"];
    if (g.contains("rank_vs_floor")) os << " (" << g["rank_vs_floor"].get<std::string>() << ")";
    os << '\n';
  }
  if (cmd == "action") {
    if (r.contains("h1_rank")) os << "H_1(M, dM)/Tors rank " << r["h1_rank"] << '\n';
    if (r.contains("note")) os << r["note"].get<std::string>() << '\n';
    for (const auto& a : r.value("actions", Json::array())) {
      os << "A[" << a["name"].get<std::string>() << "] (" << a["crossings"].get<std::string>() << "), rank "
         << a["rank"] << '\n';
      for (const auto& row : a["matrix"]) {
        os << "  ";
        for (const auto& x : row) os << x.get<int>();
        os << '\n';
      }
    }
    for (const auto& p : r.value("properties", Json::array()))
      os << (p["passed"].get<bool>() ? "pass " : "FAIL ") << p["name"].get<std::string>() << '\n';
  }
  if (cmd == "decompose") {
    for (const auto& e : r.value("surface_diagram_errors", Json::array())) os << "invalid: " << e.get<std::string>() << '\n';
    if (r.contains("euler")) {
      const auto& e = r["euler"];
      os << "chi " << e["sigma"] << " -> " << e["sigma_prime"] << " = " << e["outside"] << " + " << e["patch_a"]
         << " + " << e["patch_b"] << " - " << e["gluing"] << '\n';
    }
    if (r.contains("outer_generators"))
      os << "|O_P| " << r["outer_generators"] << " of " << r["base_generators"] << " generators\n";
    if (r.contains("new_homology")) homology(r["new_homology"], "outer summand: ");
    for (const auto& c : r.value("cycles", Json::array())) {
      os << "cycle " << c["name"].get<std::string>() << ": " << (c["all_green"].get<bool>() ? "all green" : "FAILED")
         << '\n';
      if (c.contains("checks"))
        for (const auto& [k, val] : c["checks"].items()) os << "  " << (val.get<bool>() ? "pass " : "FAIL ") << k << '\n';
      for (const auto& f : c["failures"]) os << "  " << f.get<std::string>() << '\n';
    }
  }
  if (cmd == "homotopy") {
    for (const auto& c : r.value("cycles", Json::array())) {
      os << c["name"].get<std::string>() << " (" << c["crossings"].get<std::string>() << ") class";
      for (const auto& x : c["class"]) os << ' ' << x.dump();
      os << '\n';
    }
    if (r.contains("same_class") && !r["same_class"].get<bool>()) os << "classes differ\n";
    if (r.contains("torsion_order")) os << "torsion order " << r["torsion_order"].dump() << '\n';
    if (r.contains("witness")) {
      const auto& w = r["witness"];
      if (w.is_null()) {
        os << "no witness (even order); induced maps equal: " << r["induced_maps_equal"] << '\n';
      } else {
        os << "witness m " << w["m"].dump() << ", B support";
        if (w["b_support"].empty()) os << " empty";
        for (const auto& s : w["b_support"]) os << ' ' << s["vertex"].get<std::string>() << '=' << s["value"].dump();
        os << "\nH diagonal " << w["h_diagonal"].size() << " generators\n";
        os << "identity A1 + A2 = dH + Hd: " << (w["identity_holds"].get<bool>() ? "holds" : "FAILS") << '\n';
        os << "disk relation: " << (w["disk_relation_holds"].get<bool>() ? "holds" : "FAILS") << '\n';
        os << "induced maps equal: " << r["induced_maps_equal"] << '\n';
      }
    }
  }
  os << (r.value("ok", false) ? "ok" : "FAILED") << '\n';
  return os.str();
}

}  // namespace floersut
