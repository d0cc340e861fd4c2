#include "floersut/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace floersut {

ParseError::ParseError(const std::string& source, int line, const std::string& what)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + what),
      line_(line) {}

namespace {

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

struct Line {
  int number;
  std::string text;
};

// "name : rest" -> (name, rest)
std::pair<std::string, std::string> split_named(const Line& l, const std::string& source) {
  const auto colon = l.text.find(':');
  if (colon == std::string::npos) throw ParseError(source, l.number, "expected 'name : ...'");
  const auto name = tokens(l.text.substr(0, colon));
  if (name.size() != 1) throw ParseError(source, l.number, "expected exactly one name before ':'");
  return {name[0], l.text.substr(colon + 1)};
}

class NameTable {
 public:
  explicit NameTable(std::string what) : what_(std::move(what)) {}
  int add(const std::string& name, const std::string& source, int line) {
    if (!ids_.emplace(name, static_cast<int>(names_.size())).second)
      throw ParseError(source, line, "duplicate " + what_ + " '" + name + "'");
    names_.push_back(name);
    return static_cast<int>(names_.size()) - 1;
  }
  int get(const std::string& name, const std::string& source, int line) const {
    const auto it = ids_.find(name);
    if (it == ids_.end()) throw ParseError(source, line, "unknown " + what_ + " '" + name + "'");
    return it->second;
  }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::string what_;
  std::map<std::string, int> ids_;
  std::vector<std::string> names_;
};

std::vector<EdgeUse> parse_uses(const std::string& text, const NameTable& edges, const std::string& source,
                                int line) {
  std::vector<EdgeUse> out;
  for (const auto& t : tokens(text)) {
    if (t.size() < 2 || (t[0] != '+' && t[0] != '-'))
      throw ParseError(source, line, "expected signed edge like +e1 or -e1, got '" + t + "'");
    out.push_back({edges.get(t.substr(1), source, line), t[0] == '+' ? 1 : -1});
  }
  return out;
}

std::string format_uses(const std::vector<EdgeUse>& uses, const std::vector<std::string>& edge_names) {
  std::string out;
  for (const auto& u : uses) {
    out += ' ';
    out += u.sign > 0 ? '+' : '-';
    out += edge_names[static_cast<std::size_t>(u.edge)];
  }
  return out;
}

const std::set<std::string> kSections = {"VERTICES", "EDGES", "FACES", "BOUNDARY", "ALPHA",
                                          "BETA",     "OMEGA", "PATCH"};

}  // namespace

SurfaceDiagramP SfdFile::surface_diagram() const {
  SurfaceDiagramP sd{diagram, {}, {}, {}};
  if (patch) {
    sd.p_faces = patch->p_faces;
    sd.a_edges = patch->a_edges;
    sd.b_edges = patch->b_edges;
  }
  return sd;
}

int SfdFile::find_omega(const std::string& name) const {
  for (std::size_t i = 0; i < omegas.size(); ++i)
    if (omegas[i].name == name) return static_cast<int>(i);
  return -1;
}

SfdFile parse_sfd(std::istream& in, const std::string& source) {
  std::map<std::string, std::vector<Line>> sections;
  std::string current;
  int number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    const std::string text = strip_comment(raw);
    const auto t = tokens(text);
    if (t.empty()) continue;
    if (t.size() == 1 && kSections.count(t[0])) {
      current = t[0];
      if (sections.count(current)) throw ParseError(source, number, "repeated section " + current);
      sections[current];
      continue;
    }
    if (current.empty()) throw ParseError(source, number, "content before the first section header");
    sections[current].push_back({number, text});
  }
  auto need = [&](const char* name) -> const std::vector<Line>& {
    const auto it = sections.find(name);
    if (it == sections.end()) throw ParseError(source, 0, std::string("missing section ") + name);
    return it->second;
  };

  NameTable vertices("vertex"), edges("edge"), faces("face"), alphas("alpha curve"), betas("beta curve");
  for (const auto& l : need("VERTICES"))
    for (const auto& t : tokens(l.text)) vertices.add(t, source, l.number);

  std::vector<Edge> edge_list;
  for (const auto& l : need("EDGES")) {
    const auto t = tokens(l.text);
    if (t.size() != 4) throw ParseError(source, l.number, "expected 'name source target kind'");
    const auto kind = edge_kind_from_string(t[3]);
    if (!kind) throw ParseError(source, l.number, "unknown edge kind '" + t[3] + "'");
    edges.add(t[0], source, l.number);
    edge_list.push_back({vertices.get(t[1], source, l.number), vertices.get(t[2], source, l.number), *kind});
  }

  std::vector<Face> face_list;
  for (const auto& l : need("FACES")) {
    auto [name, rest] = split_named(l, source);
    faces.add(name, source, l.number);
    face_list.push_back({parse_uses(rest, edges, source, l.number)});
  }

  PolygonalComplex surface;
  try {
    surface = PolygonalComplex::create(static_cast<int>(vertices.names().size()), edge_list, face_list);
  } catch (const ComplexError& e) {
    throw ParseError(source, 0, std::string("invalid surface: ") + e.what());
  }

  if (sections.count("BOUNDARY")) {
    int genus = 0, circles = 0;
    for (const auto& c : surface.components()) {
      genus += c.genus;
      circles += c.boundary_circles;
    }
    for (const auto& l : sections["BOUNDARY"]) {
      const auto t = tokens(l.text);
      if (t.size() != 2 || (t[0] != "genus" && t[0] != "circles"))
        throw ParseError(source, l.number, "expected 'genus G' or 'circles B'");
      int declared = 0;
      try {
        declared = std::stoi(t[1]);
      } catch (const std::exception&) {
        throw ParseError(source, l.number, "expected an integer, got '" + t[1] + "'");
      }
      const int actual = t[0] == "genus" ? genus : circles;
      if (declared != actual)
        throw ParseError(source, l.number,
                         "declared " + t[0] + " " + t[1] + " but the surface has " + std::to_string(actual));
    }
  }

  auto curves = [&](const char* section, NameTable& table) {
    std::vector<Curve> out;
    for (const auto& l : need(section)) {
      auto [name, rest] = split_named(l, source);
      table.add(name, source, l.number);
      out.push_back({parse_uses(rest, edges, source, l.number)});
    }
    return out;
  };
  auto alpha_curves = curves("ALPHA", alphas);
  auto beta_curves = curves("BETA", betas);

  SfdFile file;
  try {
    file.diagram = SuturedDiagram::create(std::move(surface), std::move(alpha_curves), std::move(beta_curves));
  } catch (const DiagramError& e) {
    throw ParseError(source, 0, std::string("invalid diagram: ") + e.what());
  }

  NameTable omega_names("cycle");
  for (const auto& l : sections["OMEGA"]) {
    auto [name, rest] = split_named(l, source);
    omega_names.add(name, source, l.number);
    DualCycle c{parse_uses(rest, edges, source, l.number)};
    try {
      file.diagram.check_cycle(c);
    } catch (const DiagramError& e) {
      throw ParseError(source, l.number, "cycle '" + name + "' is not closed: " + e.what());
    }
    file.omegas.push_back({name, std::move(c)});
  }

  if (sections.count("PATCH")) {
    PatchSpec p;
    for (const auto& l : sections["PATCH"]) {
      auto [name, rest] = split_named(l, source);
      const auto t = tokens(rest);
      if (name == "P") {
        for (const auto& f : t) p.p_faces.push_back(faces.get(f, source, l.number));
      } else if (name == "A" || name == "B") {
        auto& list = name == "A" ? p.a_edges : p.b_edges;
        for (const auto& e : t) list.push_back(edges.get(e, source, l.number));
      } else {
        throw ParseError(source, l.number, "PATCH entries are P, A or B, got '" + name + "'");
      }
    }
    file.patch = std::move(p);
  }

  file.names = {vertices.names(), edges.names(), faces.names(), alphas.names(), betas.names()};
  return file;
}

SfdFile load_sfd(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_sfd(in, path);
}

void write_sfd(std::ostream& out, const SfdFile& file) {
  const auto& s = file.diagram.surface();
  auto names = [](const std::vector<std::string>& given, std::size_t count, const char* prefix) {
    std::vector<std::string> out = given;
    for (std::size_t i = out.size(); i < count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
  };
  const auto vn = names(file.names.vertices, static_cast<std::size_t>(s.vertex_count()), "v");
  const auto en = names(file.names.edges, static_cast<std::size_t>(s.edge_count()), "e");
  const auto fn = names(file.names.faces, static_cast<std::size_t>(s.face_count()), "f");
  const auto an = names(file.names.alphas, file.diagram.alphas().size(), "alpha");
  const auto bn = names(file.names.betas, file.diagram.betas().size(), "beta");

  out << "VERTICES\n";
  for (std::size_t v = 0; v < vn.size(); ++v) out << (v % 12 == 0 ? "" : " ") << vn[v] << (v % 12 == 11 ? "\n" : "");
  if (vn.size() % 12 != 0) out << '\n';
  out << "EDGES\n";
  for (int e = 0; e < s.edge_count(); ++e)
    out << en[static_cast<std::size_t>(e)] << ' ' << vn[static_cast<std::size_t>(s.edge(e).source)] << ' '
        << vn[static_cast<std::size_t>(s.edge(e).target)] << ' ' << to_string(s.edge(e).kind) << '\n';
  out << "FACES\n";
  for (int f = 0; f < s.face_count(); ++f) out << fn[static_cast<std::size_t>(f)] << " :" << format_uses(s.face(f).word, en) << '\n';
  int genus = 0, circles = 0;
  for (const auto& c : s.components()) {
    genus += c.genus;
    circles += c.boundary_circles;
  }
  out << "BOUNDARY\ngenus " << genus << "\ncircles " << circles << '\n';
  out << "ALPHA\n";
  for (std::size_t i = 0; i < an.size(); ++i) out << an[i] << " :" << format_uses(file.diagram.alphas()[i].edges, en) << '\n';
  out << "BETA\n";
  for (std::size_t i = 0; i < bn.size(); ++i) out << bn[i] << " :" << format_uses(file.diagram.betas()[i].edges, en) << '\n';
  if (!file.omegas.empty()) {
    out << "OMEGA\n";
    for (const auto& w : file.omegas) out << w.name << " :" << format_uses(w.cycle.crossings, en) << '\n';
  }
  if (file.patch) {
    out << "PATCH\nP :";
    for (int f : file.patch->p_faces) out << ' ' << fn[static_cast<std::size_t>(f)];
    out << "\nA :";
    for (int e : file.patch->a_edges) out << ' ' << en[static_cast<std::size_t>(e)];
    out << "\nB :";
    for (int e : file.patch->b_edges) out << ' ' << en[static_cast<std::size_t>(e)];
    out << '\n';
  }
}

GridSpec parse_grid(std::istream& in, const std::string& source) {
  GridSpec g;
  std::optional<int> n;
  std::optional<std::vector<int>> xs, os;
  int number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    std::string text = strip_comment(raw);
    const auto colon = text.find(':');
    std::string key;
    if (colon != std::string::npos) {
      const auto k = tokens(text.substr(0, colon));
      if (k.size() != 1) throw ParseError(source, number, "expected 'X:' or 'O:'");
      key = k[0];
      text = text.substr(colon + 1);
    }
    const auto t = tokens(text);
    if (key.empty() && t.empty()) continue;
    auto ints = [&](const std::vector<std::string>& ts) {
      std::vector<int> out;
      for (const auto& s : ts) {
        std::size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(s, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != s.size() || s.empty()) throw ParseError(source, number, "expected an integer, got '" + s + "'");
        out.push_back(v);
      }
      return out;
    };
    if (key.empty()) {
      if (t.size() != 2 || t[0] != "n") throw ParseError(source, number, "expected 'n N', 'X: ...' or 'O: ...'");
      if (n) throw ParseError(source, number, "repeated size line");
      n = ints({t[1]})[0];
    } else if (key == "X" || key == "O") {
      auto& slot = key == "X" ? xs : os;
      if (slot) throw ParseError(source, number, "repeated " + key + " line");
      auto rows = ints(t);
      for (auto& r : rows) --r;
      slot = std::move(rows);
    } else {
      throw ParseError(source, number, "unknown key '" + key + "'");
    }
  }
  if (!n || !xs || !os) throw ParseError(source, 0, "grid needs 'n', 'X:' and 'O:' lines");
  if (*n < 1) throw ParseError(source, 0, "grid size must be positive");
  if (xs->size() != static_cast<std::size_t>(*n) || os->size() != static_cast<std::size_t>(*n))
    throw ParseError(source, 0, "X and O need exactly n entries");
  g.n = *n;
  g.xs = std::move(*xs);
  g.os = std::move(*os);
  try {
    g.check();
  } catch (const DiagramError& e) {
    throw ParseError(source, 0, std::string("invalid grid: ") + e.what());
  }
  return g;
}

GridSpec load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_grid(in, path);
}

void write_grid(std::ostream& out, const GridSpec& g) {
  out << "n " << g.n << "\nX:";
  for (int r : g.xs) out << ' ' << r + 1;
  out << "\nO:";
  for (int r : g.os) out << ' ' << r + 1;
  out << '\n';
}

DualCycle parse_cycle(const std::string& text, const SfdFile& file) {
  NameTable edges("edge");
  const auto& s = file.diagram.surface();
  for (int e = 0; e < s.edge_count(); ++e)
    edges.add(e < static_cast<int>(file.names.edges.size()) ? file.names.edges[static_cast<std::size_t>(e)]
                                                             : "e" + std::to_string(e),
              "<cycle>", 0);
  DualCycle c{parse_uses(text, edges, "<cycle>", 0)};
  file.diagram.check_cycle(c);
  return c;
}

}  // namespace floersut
