#include "floersut/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace floersut {

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::alpha:
      return "alpha";
    case EdgeKind::beta:
      return "beta";
    case EdgeKind::boundary:
      return "boundary";
    case EdgeKind::auxiliary:
      return "aux";
  }
  return "?";
}

std::optional<EdgeKind> edge_kind_from_string(const std::string& s) {
  if (s == "alpha" || s == "a") return EdgeKind::alpha;
  if (s == "beta" || s == "b") return EdgeKind::beta;
  if (s == "boundary" || s == "d") return EdgeKind::boundary;
  if (s == "aux" || s == "auxiliary" || s == "x") return EdgeKind::auxiliary;
  return std::nullopt;
}

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

PolygonalComplex PolygonalComplex::create(int vertex_count, std::vector<Edge> edges, std::vector<Face> faces) {
  PolygonalComplex c;
  c.vertex_count_ = vertex_count;
  c.edges_ = std::move(edges);
  c.faces_ = std::move(faces);
  c.build();
  return c;
}

EdgeUse PolygonalComplex::use_at(Occurrence o) const {
  const auto& w = face(o.face).word;
  return w.at(static_cast<std::size_t>(wrap(o.position, static_cast<int>(w.size()))));
}

EdgeUse PolygonalComplex::incoming_at(Wedge w) const { return use_at({w.face, w.position - 1}); }

std::optional<Occurrence> PolygonalComplex::partner(Occurrence o) const {
  const int e = use_at(o).edge;
  const int pos = wrap(o.position, static_cast<int>(face(o.face).word.size()));
  for (const auto& other : occurrences(e))
    if (!(other.face == o.face && other.position == pos)) return other;
  return std::nullopt;
}

std::optional<Occurrence> PolygonalComplex::occurrence_of(EdgeUse u) const {
  for (const auto& o : occurrences(u.edge))
    if (use_at(o).sign == u.sign) return o;
  return std::nullopt;
}

int PolygonalComplex::component_of_vertex(int v) const {
  const auto& r = rotation(v);
  return r.empty() ? -1 : component_of_face(r.front().face);
}

void PolygonalComplex::build() {
  const int nv = vertex_count_;
  const int ne = edge_count();
  const int nf = face_count();
  if (nv < 0) throw ComplexError("negative vertex count");
  for (int e = 0; e < ne; ++e) {
    const auto& ed = edges_[static_cast<std::size_t>(e)];
    if (ed.source < 0 || ed.source >= nv || ed.target < 0 || ed.target >= nv)
      throw ComplexError("edge " + std::to_string(e) + " references a missing vertex");
  }
  occurrences_.assign(static_cast<std::size_t>(ne), {});
  for (int f = 0; f < nf; ++f) {
    const auto& word = faces_[static_cast<std::size_t>(f)].word;
    if (word.empty()) throw ComplexError("face " + std::to_string(f) + " has an empty boundary word");
    for (int k = 0; k < static_cast<int>(word.size()); ++k) {
      const EdgeUse u = word[static_cast<std::size_t>(k)];
      if (u.edge < 0 || u.edge >= ne)
        throw ComplexError("face " + std::to_string(f) + " references a missing edge (dangling edge reference)");
      if (u.sign != 1 && u.sign != -1) throw ComplexError("edge use sign must be +1 or -1");
      occurrences_[static_cast<std::size_t>(u.edge)].push_back({f, k});
    }
    for (std::size_t k = 0; k < word.size(); ++k) {
      const EdgeUse next = word[(k + 1) % word.size()];
      if (use_end(word[k]) != use_start(next))
        throw ComplexError("face " + std::to_string(f) + " boundary word is not a closed walk");
    }
  }
  for (int e = 0; e < ne; ++e) {
    const auto& occ = occurrences_[static_cast<std::size_t>(e)];
    const bool boundary = edges_[static_cast<std::size_t>(e)].kind == EdgeKind::boundary;
    if (occ.size() > 2) throw ComplexError("non-manifold edge " + std::to_string(e) + " (used more than twice)");
    if (occ.empty()) throw ComplexError("edge " + std::to_string(e) + " lies on no face");
    if (boundary && occ.size() != 1)
      throw ComplexError("boundary edge " + std::to_string(e) + " must lie on exactly one face");
    if (!boundary && occ.size() != 2)
      throw ComplexError("interior edge " + std::to_string(e) + " must lie on exactly two faces");
    if (occ.size() == 2 && use_at(occ[0]).sign == use_at(occ[1]).sign)
      throw ComplexError("inconsistent orientation along edge " + std::to_string(e));
  }

  // Vertex rotations.
  std::vector<std::vector<Wedge>> wedges_at(static_cast<std::size_t>(nv));
  for (int f = 0; f < nf; ++f)
    for (int k = 0; k < static_cast<int>(faces_[static_cast<std::size_t>(f)].word.size()); ++k)
      wedges_at[static_cast<std::size_t>(wedge_vertex({f, k}))].push_back({f, k});
  auto next_around = [&](Wedge w) -> std::optional<Wedge> {
    auto p = partner(w);
    if (!p) return std::nullopt;
    return Wedge{p->face, wrap(p->position + 1, static_cast<int>(face(p->face).word.size()))};
  };
  rotations_.assign(static_cast<std::size_t>(nv), {});
  boundary_vertex_.assign(static_cast<std::size_t>(nv), false);
  for (int v = 0; v < nv; ++v) {
    const auto& all = wedges_at[static_cast<std::size_t>(v)];
    if (all.empty()) throw ComplexError("vertex " + std::to_string(v) + " is isolated");
    Wedge start = all.front();
    for (const auto& w : all)
      if (is_boundary_edge(incoming_at(w).edge)) {
        start = w;
        boundary_vertex_[static_cast<std::size_t>(v)] = true;
        break;
      }
    auto& orbit = rotations_[static_cast<std::size_t>(v)];
    std::optional<Wedge> cur = start;
    while (cur) {
      orbit.push_back(*cur);
      if (orbit.size() > all.size()) throw ComplexError("vertex " + std::to_string(v) + " has a broken rotation");
      cur = next_around(*cur);
      if (cur && *cur == start) break;
    }
    if (orbit.size() != all.size())
      throw ComplexError("vertex " + std::to_string(v) + " is not a manifold point (pinched link)");
  }

  // Boundary circles.
  boundary_circles_.clear();
  std::set<int> seen;
  for (int e = 0; e < ne; ++e) {
    if (!is_boundary_edge(e) || seen.count(e)) continue;
    std::vector<EdgeUse> circle;
    Occurrence o = occurrences(e).front();
    for (;;) {
      const EdgeUse u = use_at(o);
      if (seen.count(u.edge)) break;
      seen.insert(u.edge);
      circle.push_back(u);
      std::optional<Wedge> w = Wedge{o.face, wrap(o.position + 1, static_cast<int>(face(o.face).word.size()))};
      while (w && !is_boundary_edge(use_at(*w).edge)) w = next_around(*w);
      if (!w) throw ComplexError("boundary circle tracing failed");
      o = *w;
    }
    boundary_circles_.push_back(std::move(circle));
  }

  // Components.
  UnionFind uf(nf);
  for (int e = 0; e < ne; ++e) {
    const auto& occ = occurrences(e);
    if (occ.size() == 2) uf.unite(occ[0].face, occ[1].face);
  }
  face_component_.assign(static_cast<std::size_t>(nf), -1);
  components_.clear();
  std::vector<int> root_index(static_cast<std::size_t>(nf), -1);
  for (int f = 0; f < nf; ++f) {
    const int r = uf.find(f);
    if (root_index[static_cast<std::size_t>(r)] < 0) {
      root_index[static_cast<std::size_t>(r)] = static_cast<int>(components_.size());
      components_.emplace_back();
    }
    const int ci = root_index[static_cast<std::size_t>(r)];
    face_component_[static_cast<std::size_t>(f)] = ci;
    components_[static_cast<std::size_t>(ci)].faces.push_back(f);
    components_[static_cast<std::size_t>(ci)].euler_characteristic += 1;
  }
  for (int v = 0; v < nv; ++v) components_[static_cast<std::size_t>(component_of_vertex(v))].euler_characteristic += 1;
  for (int e = 0; e < ne; ++e)
    components_[static_cast<std::size_t>(component_of_face(occurrences(e).front().face))].euler_characteristic -= 1;
  for (const auto& circle : boundary_circles_)
    components_[static_cast<std::size_t>(component_of_face(occurrences(circle.front().edge).front().face))]
        .boundary_circles += 1;
  for (auto& comp : components_) {
    const int twice_genus = 2 - comp.boundary_circles - comp.euler_characteristic;
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw ComplexError("component Euler characteristic is not that of an orientable surface");
    comp.genus = twice_genus / 2;
  }
}

PolygonalComplex PolygonalComplex::subdivide(int e) const {
  if (e < 0 || e >= edge_count()) throw ComplexError("subdivide: no edge " + std::to_string(e));
  const int mid = vertex_count_;
  const int second = edge_count();
  auto edges = edges_;
  const Edge old = edges[static_cast<std::size_t>(e)];
  edges[static_cast<std::size_t>(e)].target = mid;
  edges.push_back({mid, old.target, old.kind});
  auto faces = faces_;
  for (auto& f : faces) {
    std::vector<EdgeUse> word;
    for (const auto& u : f.word) {
      if (u.edge != e) {
        word.push_back(u);
      } else if (u.sign > 0) {
        word.push_back({e, 1});
        word.push_back({second, 1});
      } else {
        word.push_back({second, -1});
        word.push_back({e, -1});
      }
    }
    f.word = std::move(word);
  }
  return create(vertex_count_ + 1, std::move(edges), std::move(faces));
}

IntMatrix PolygonalComplex::coboundary0() const {
  IntMatrix d(static_cast<std::size_t>(edge_count()), static_cast<std::size_t>(vertex_count_));
  for (int e = 0; e < edge_count(); ++e) {
    const auto& ed = edge(e);
    d(static_cast<std::size_t>(e), static_cast<std::size_t>(ed.target)) += 1;
    d(static_cast<std::size_t>(e), static_cast<std::size_t>(ed.source)) -= 1;
  }
  return d;
}

IntMatrix PolygonalComplex::coboundary1() const {
  IntMatrix d(static_cast<std::size_t>(face_count()), static_cast<std::size_t>(edge_count()));
  for (int f = 0; f < face_count(); ++f)
    for (const auto& u : face(f).word) d(static_cast<std::size_t>(f), static_cast<std::size_t>(u.edge)) += u.sign;
  return d;
}

std::vector<int> all_boundary_edges(const PolygonalComplex& c) {
  std::vector<int> out;
  for (int e = 0; e < c.edge_count(); ++e)
    if (c.is_boundary_edge(e)) out.push_back(e);
  return out;
}

AbelianGroupPresentation homology_pair(const PolygonalComplex& c, const std::vector<int>& rel_edges,
                                       const std::vector<std::vector<EdgeUse>>& extra_cycles) {
  std::set<int> rel(rel_edges.begin(), rel_edges.end());
  std::set<int> rel_vertices;
  for (int e : rel) {
    if (e < 0 || e >= c.edge_count() || !c.is_boundary_edge(e))
      throw ComplexError("relative subcomplex must consist of boundary edges");
  }
  for (const auto& circle : c.boundary_circles()) {
    std::size_t hit = 0;
    for (const auto& u : circle) hit += rel.count(u.edge);
    if (hit != 0 && hit != circle.size())
      throw ComplexError("relative subcomplex is not a union of full boundary circles");
    if (hit != 0)
      for (const auto& u : circle) {
        rel_vertices.insert(c.edge(u.edge).source);
        rel_vertices.insert(c.edge(u.edge).target);
      }
  }
  std::vector<int> edge_index(static_cast<std::size_t>(c.edge_count()), -1);
  std::vector<int> vertex_index(static_cast<std::size_t>(c.vertex_count()), -1);
  int ne = 0, nv = 0;
  for (int e = 0; e < c.edge_count(); ++e)
    if (!rel.count(e)) edge_index[static_cast<std::size_t>(e)] = ne++;
  for (int v = 0; v < c.vertex_count(); ++v)
    if (!rel_vertices.count(v)) vertex_index[static_cast<std::size_t>(v)] = nv++;

  IntMatrix d1(static_cast<std::size_t>(nv), static_cast<std::size_t>(ne));
  for (int e = 0; e < c.edge_count(); ++e) {
    const int j = edge_index[static_cast<std::size_t>(e)];
    if (j < 0) continue;
    const int t = vertex_index[static_cast<std::size_t>(c.edge(e).target)];
    const int s = vertex_index[static_cast<std::size_t>(c.edge(e).source)];
    if (t >= 0) d1(static_cast<std::size_t>(t), static_cast<std::size_t>(j)) += 1;
    if (s >= 0) d1(static_cast<std::size_t>(s), static_cast<std::size_t>(j)) -= 1;
  }
  const SmithForm snf = smith_normal_form(d1);
  const std::size_t kdim = static_cast<std::size_t>(ne) - snf.rank;

  auto chain_of = [&](const std::vector<EdgeUse>& uses) {
    IntVector v(static_cast<std::size_t>(ne));
    for (const auto& u : uses) {
      const int j = edge_index[static_cast<std::size_t>(u.edge)];
      if (j >= 0) v[static_cast<std::size_t>(j)] += u.sign;
    }
    return v;
  };
  std::vector<IntVector> relations;
  for (int f = 0; f < c.face_count(); ++f) relations.push_back(kernel_coordinates(snf, chain_of(c.face(f).word)));
  for (const auto& cyc : extra_cycles) relations.push_back(kernel_coordinates(snf, chain_of(cyc)));
  return present_quotient(kdim, IntMatrix::from_columns(kdim, relations));
}

}  // namespace floersut
