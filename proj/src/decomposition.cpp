#include "floersut/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace floersut {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

std::vector<char> face_flags(const SurfaceDiagramP& sd) {
  std::vector<char> in(static_cast<std::size_t>(sd.base.surface().face_count()), 0);
  for (int f : sd.p_faces)
    if (f >= 0 && f < static_cast<int>(in.size())) in[static_cast<std::size_t>(f)] = 1;
  return in;
}

std::vector<char> edge_flags(const SurfaceDiagramP& sd, const std::vector<int>& edges) {
  std::vector<char> in(static_cast<std::size_t>(sd.base.surface().edge_count()), 0);
  for (int e : edges)
    if (e >= 0 && e < static_cast<int>(in.size())) in[static_cast<std::size_t>(e)] = 1;
  return in;
}

// Closed-cell Euler characteristic of a set of faces.
int closure_euler(const PolygonalComplex& s, const std::vector<char>& faces) {
  std::set<int> edges, vertices;
  int f_count = 0;
  for (int f = 0; f < s.face_count(); ++f) {
    if (!faces[static_cast<std::size_t>(f)]) continue;
    ++f_count;
    for (const auto& u : s.face(f).word) {
      edges.insert(u.edge);
      vertices.insert(s.use_start(u));
    }
  }
  return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) + f_count;
}

// Sum over cells of (number of sheets meeting the cell - 1), vertices minus edges.
int gluing_correction(const PolygonalComplex& s, const std::vector<std::pair<int, Sheet>>& face_map) {
  auto sheet_of = [&](int f) { return face_map[static_cast<std::size_t>(f)].second; };
  int total = 0;
  for (int v = 0; v < s.vertex_count(); ++v) {
    std::set<Sheet> sheets;
    for (const auto& w : s.rotation(v)) sheets.insert(sheet_of(w.face));
    total += static_cast<int>(sheets.size()) - 1;
  }
  for (int e = 0; e < s.edge_count(); ++e) {
    std::set<Sheet> sheets;
    for (const auto& o : s.occurrences(e)) sheets.insert(sheet_of(o.face));
    total -= static_cast<int>(sheets.size()) - 1;
  }
  return total;
}

}  // namespace

std::vector<std::string> check_surface_diagram(const SurfaceDiagramP& sd) {
  std::vector<std::string> errors;
  const auto& s = sd.base.surface();
  for (int f : sd.p_faces)
    if (f < 0 || f >= s.face_count()) errors.push_back("P references a missing face");
  for (const auto* list : {&sd.a_edges, &sd.b_edges})
    for (int e : *list)
      if (e < 0 || e >= s.edge_count()) errors.push_back("A or B references a missing edge");
  if (!errors.empty()) return errors;
  const auto in_p = face_flags(sd);
  const auto in_a = edge_flags(sd, sd.a_edges);
  const auto in_b = edge_flags(sd, sd.b_edges);
  for (int e = 0; e < s.edge_count(); ++e) {
    const auto& occ = s.occurrences(e);
    const bool on_dp = occ.size() == 2 && in_p[static_cast<std::size_t>(occ[0].face)] != in_p[static_cast<std::size_t>(occ[1].face)];
    if (occ.size() == 1 && in_p[static_cast<std::size_t>(occ[0].face)])
      errors.push_back("P meets the boundary along edge " + std::to_string(e));
    const bool listed = in_a[static_cast<std::size_t>(e)] || in_b[static_cast<std::size_t>(e)];
    if (in_a[static_cast<std::size_t>(e)] && in_b[static_cast<std::size_t>(e)])
      errors.push_back("edge " + std::to_string(e) + " lies in both A and B");
    if (on_dp && !listed) errors.push_back("edge " + std::to_string(e) + " of dP is in neither A nor B");
    if (!on_dp && listed) errors.push_back("edge " + std::to_string(e) + " is listed in A or B but is not on dP");
    if (listed && s.edge(e).kind != EdgeKind::auxiliary)
      errors.push_back("edge " + std::to_string(e) + " of dP is not auxiliary");
  }
  auto endpoints = [&](int e) { return std::array<int, 2>{s.edge(e).source, s.edge(e).target}; };
  for (int e : sd.a_edges)
    for (int v : endpoints(e))
      if (sd.base.beta_at_vertex(v) >= 0) errors.push_back("A edge " + std::to_string(e) + " meets a beta curve");
  for (int e : sd.b_edges)
    for (int v : endpoints(e))
      if (sd.base.alpha_at_vertex(v) >= 0) errors.push_back("B edge " + std::to_string(e) + " meets an alpha curve");
  std::vector<char> touches_a(static_cast<std::size_t>(s.vertex_count()), 0), touches_b = touches_a;
  for (int e : sd.a_edges)
    for (int v : endpoints(e)) touches_a[static_cast<std::size_t>(v)] = 1;
  for (int e : sd.b_edges)
    for (int v : endpoints(e)) touches_b[static_cast<std::size_t>(v)] = 1;
  for (int v = 0; v < s.vertex_count(); ++v) {
    bool in_closure = false;
    for (const auto& w : s.rotation(v)) in_closure = in_closure || in_p[static_cast<std::size_t>(w.face)];
    const bool corner = touches_a[static_cast<std::size_t>(v)] && touches_b[static_cast<std::size_t>(v)];
    if (corner && !s.is_boundary_vertex(v))
      errors.push_back("A and B meet at interior vertex " + std::to_string(v));
    if (in_closure && s.is_boundary_vertex(v) && !corner)
      errors.push_back("P meets the boundary at vertex " + std::to_string(v) + " away from A and B");
  }
  return errors;
}

Decomposition decompose(const SurfaceDiagramP& sd) {
  const auto errors = check_surface_diagram(sd);
  if (!errors.empty()) throw DiagramError("invalid surface diagram: " + errors.front());
  const auto& s = sd.base.surface();
  const auto in_p = face_flags(sd);
  const auto in_a = edge_flags(sd, sd.a_edges);
  const auto in_b = edge_flags(sd, sd.b_edges);
  Decomposition dec;

  dec.face_copy.assign(static_cast<std::size_t>(s.face_count()), {-1, -1, -1});
  auto add_face = [&](int f, Sheet sh) {
    dec.face_copy[static_cast<std::size_t>(f)][static_cast<std::size_t>(sh)] = static_cast<int>(dec.face_map.size());
    dec.face_map.push_back({f, sh});
  };
  for (int f = 0; f < s.face_count(); ++f)
    if (!in_p[static_cast<std::size_t>(f)]) add_face(f, Sheet::outside);
  for (Sheet sh : {Sheet::a, Sheet::b})
    for (int f = 0; f < s.face_count(); ++f)
      if (in_p[static_cast<std::size_t>(f)]) add_face(f, sh);
  const int nf = static_cast<int>(dec.face_map.size());

  // Partner of a new occurrence after regluing, if glued.
  auto glued_partner = [&](int nf_id, int k) -> std::optional<Occurrence> {
    const auto [f, sh] = dec.face_map[static_cast<std::size_t>(nf_id)];
    auto p = s.partner({f, k});
    if (!p) return std::nullopt;
    const int e = s.use_at({f, k}).edge;
    const bool here = in_p[static_cast<std::size_t>(f)], there = in_p[static_cast<std::size_t>(p->face)];
    Sheet other;
    if (here == there) {
      other = sh;
    } else if (!here) {
      other = in_a[static_cast<std::size_t>(e)] ? Sheet::a : Sheet::b;
    } else {
      const bool ok = (in_a[static_cast<std::size_t>(e)] && sh == Sheet::a) || (in_b[static_cast<std::size_t>(e)] && sh == Sheet::b);
      if (!ok) return std::nullopt;
      other = Sheet::outside;
    }
    return Occurrence{dec.face_copy[static_cast<std::size_t>(p->face)][static_cast<std::size_t>(other)], p->position};
  };

  // Wedge classes give the new vertices.
  std::vector<int> offset(static_cast<std::size_t>(nf) + 1, 0);
  for (int g = 0; g < nf; ++g)
    offset[static_cast<std::size_t>(g) + 1] =
        offset[static_cast<std::size_t>(g)] + static_cast<int>(s.face(dec.face_map[static_cast<std::size_t>(g)].first).word.size());
  auto wedge_id = [&](int g, int k) {
    const int len = offset[static_cast<std::size_t>(g) + 1] - offset[static_cast<std::size_t>(g)];
    return offset[static_cast<std::size_t>(g)] + wrap(k, len);
  };
  std::vector<int> parent(static_cast<std::size_t>(offset.back()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::vector<std::vector<int>> edge_of(static_cast<std::size_t>(nf));
  std::vector<Edge> edges;
  for (int g = 0; g < nf; ++g) {
    const int f = dec.face_map[static_cast<std::size_t>(g)].first;
    edge_of[static_cast<std::size_t>(g)].assign(s.face(f).word.size(), -1);
  }
  for (int g = 0; g < nf; ++g) {
    const auto [f, sh] = dec.face_map[static_cast<std::size_t>(g)];
    const int len = static_cast<int>(s.face(f).word.size());
    for (int k = 0; k < len; ++k) {
      auto q = glued_partner(g, k);
      if (q) {
        parent[static_cast<std::size_t>(find(wedge_id(g, k)))] = find(wedge_id(q->face, q->position + 1));
        parent[static_cast<std::size_t>(find(wedge_id(g, k + 1)))] = find(wedge_id(q->face, q->position));
      }
      if (edge_of[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)] >= 0) continue;
      const int old = s.use_at({f, k}).edge;
      EdgeKind kind = s.edge(old).kind;
      if (!q && kind != EdgeKind::boundary) kind = EdgeKind::boundary;
      if (kind == EdgeKind::alpha && sh == Sheet::b) kind = EdgeKind::auxiliary;
      if (kind == EdgeKind::beta && sh == Sheet::a) kind = EdgeKind::auxiliary;
      const int id = static_cast<int>(edges.size());
      edges.push_back({0, 0, kind});
      dec.edge_map.push_back(old);
      edge_of[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)] = id;
      if (q) edge_of[static_cast<std::size_t>(q->face)][static_cast<std::size_t>(q->position)] = id;
    }
  }
  std::map<int, int> vertex_of_root;
  std::vector<int> vertex_of_wedge(parent.size());
  for (int g = 0; g < nf; ++g) {
    const int f = dec.face_map[static_cast<std::size_t>(g)].first;
    for (int k = 0; k < static_cast<int>(s.face(f).word.size()); ++k) {
      auto [it, inserted] = vertex_of_root.emplace(find(wedge_id(g, k)), static_cast<int>(dec.vertex_map.size()));
      if (inserted) dec.vertex_map.push_back(s.wedge_vertex({f, k}));
      vertex_of_wedge[static_cast<std::size_t>(wedge_id(g, k))] = it->second;
    }
  }
  std::vector<Face> faces(static_cast<std::size_t>(nf));
  for (int g = 0; g < nf; ++g) {
    const int f = dec.face_map[static_cast<std::size_t>(g)].first;
    const auto& word = s.face(f).word;
    for (int k = 0; k < static_cast<int>(word.size()); ++k) {
      const EdgeUse u = word[static_cast<std::size_t>(k)];
      const int id = edge_of[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)];
      const int start = vertex_of_wedge[static_cast<std::size_t>(wedge_id(g, k))];
      const int end = vertex_of_wedge[static_cast<std::size_t>(wedge_id(g, k + 1))];
      edges[static_cast<std::size_t>(id)].source = u.sign > 0 ? start : end;
      edges[static_cast<std::size_t>(id)].target = u.sign > 0 ? end : start;
      faces[static_cast<std::size_t>(g)].word.push_back({id, u.sign});
    }
  }
  PolygonalComplex surface =
      PolygonalComplex::create(static_cast<int>(dec.vertex_map.size()), std::move(edges), std::move(faces));

  auto lift_curves = [&](const std::vector<Curve>& curves, Sheet inside) {
    std::vector<Curve> out;
    for (const auto& c : curves) {
      Curve nc;
      for (const auto& u : c.edges) {
        const Occurrence o = s.occurrences(u.edge).front();
        const Sheet sh = in_p[static_cast<std::size_t>(o.face)] ? inside : Sheet::outside;
        const int g = dec.face_copy[static_cast<std::size_t>(o.face)][static_cast<std::size_t>(sh)];
        nc.edges.push_back({edge_of[static_cast<std::size_t>(g)][static_cast<std::size_t>(o.position)], u.sign});
      }
      out.push_back(std::move(nc));
    }
    return out;
  };
  dec.diagram = SuturedDiagram::create(std::move(surface), lift_curves(sd.base.alphas(), Sheet::a),
                                       lift_curves(sd.base.betas(), Sheet::b));
  const auto& s2 = dec.diagram.surface();
  auto sheet_faces = [&](Sheet sh) {
    std::vector<char> in(dec.face_map.size());
    for (std::size_t f = 0; f < in.size(); ++f) in[f] = dec.face_map[f].second == sh;
    return closure_euler(s2, in);
  };
  dec.euler_new = s2.euler_characteristic();
  dec.euler_outside = sheet_faces(Sheet::outside);
  dec.euler_patch_a = sheet_faces(Sheet::a);
  dec.euler_patch_b = sheet_faces(Sheet::b);
  dec.euler_patch = closure_euler(s, in_p);
  dec.euler_gluing = gluing_correction(dec.diagram.surface(), dec.face_map);
  return dec;
}

std::vector<int> outer_generators(const SurfaceDiagramP& sd, const GeneratorSet& gens) {
  const auto& s = sd.base.surface();
  const auto in_p = face_flags(sd);
  std::vector<char> vertex_in_p(static_cast<std::size_t>(s.vertex_count()), 0);
  for (int v = 0; v < s.vertex_count(); ++v)
    for (const auto& w : s.rotation(v))
      if (in_p[static_cast<std::size_t>(w.face)]) vertex_in_p[static_cast<std::size_t>(v)] = 1;
  std::vector<int> out;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    bool outer = true;
    for (int p : gens.generators[g]) outer = outer && !vertex_in_p[static_cast<std::size_t>(p)];
    if (outer) out.push_back(static_cast<int>(g));
  }
  return out;
}

DualCycle push_off_b(const SurfaceDiagramP& sd, const DualCycle& omega) {
  const auto& d = sd.base;
  const auto& s = d.surface();
  d.check_cycle(omega);
  auto c = d.cochain_small(omega);
  // Vertices of the B path from the target of e up to its corner.
  auto corner_path = [&](int e) {
    std::set<int> path{s.edge(e).target};
    int cur = s.edge(e).target, prev = e;
    while (!s.is_boundary_vertex(cur)) {
      int next = -1;
      for (int f : sd.b_edges)
        if (f != prev && (s.edge(f).source == cur || s.edge(f).target == cur)) next = f;
      if (next < 0) throw DiagramError("B path does not reach a corner");
      cur = s.edge(next).source == cur ? s.edge(next).target : s.edge(next).source;
      prev = next;
      if (!path.insert(cur).second) throw DiagramError("B path is not simple");
    }
    return path;
  };
  bool touched = false;
  for (std::size_t pass = 0; pass <= sd.b_edges.size(); ++pass) {
    for (int e : sd.b_edges) {
      const long long k = c[static_cast<std::size_t>(e)];
      if (k == 0) continue;
      touched = true;
      const auto path = corner_path(e);
      for (int g = 0; g < s.edge_count(); ++g) {
        const auto delta = static_cast<long long>(path.count(s.edge(g).target)) -
                           static_cast<long long>(path.count(s.edge(g).source));
        c[static_cast<std::size_t>(g)] -= k * delta;
      }
    }
  }
  if (!touched) return omega;
  for (int e : sd.b_edges)
    if (c[static_cast<std::size_t>(e)] != 0) throw DiagramError("could not clear crossings on B");
  IntVector big(c.begin(), c.end());
  DualCycle out = d.cycle_from_cochain(big);
  d.check_cycle(out);
  return out;
}

DualCycle lift_cycle(const SurfaceDiagramP& sd, const Decomposition& dec, const DualCycle& omega) {
  const auto& s = sd.base.surface();
  const auto in_p = face_flags(sd);
  const auto in_b = edge_flags(sd, sd.b_edges);
  DualCycle out;
  for (const auto& u : omega.crossings) {
    if (u.edge < 0 || u.edge >= s.edge_count()) throw DiagramError("crossing references a missing edge");
    if (in_b[static_cast<std::size_t>(u.edge)]) throw DiagramError("cycle meets B");
    const Occurrence o = s.occurrences(u.edge).front();
    const Sheet sh = in_p[static_cast<std::size_t>(o.face)] ? Sheet::a : Sheet::outside;
    const int g = dec.face_copy[static_cast<std::size_t>(o.face)][static_cast<std::size_t>(sh)];
    out.crossings.push_back({dec.diagram.surface().face(g).word[static_cast<std::size_t>(o.position)].edge, u.sign});
  }
  return out;
}

}  // namespace floersut
