#include "floersut/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace floersut {

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

bool is_curve_kind(EdgeKind k) { return k == EdgeKind::alpha || k == EdgeKind::beta; }

}  // namespace

DualCycle operator+(const DualCycle& a, const DualCycle& b) {
  DualCycle out = a;
  out.crossings.insert(out.crossings.end(), b.crossings.begin(), b.crossings.end());
  return out;
}

DualCycle operator-(const DualCycle& a) {
  DualCycle out;
  for (auto it = a.crossings.rbegin(); it != a.crossings.rend(); ++it) out.crossings.push_back(it->reversed());
  return out;
}

SuturedDiagram SuturedDiagram::create(PolygonalComplex surface, std::vector<Curve> alphas, std::vector<Curve> betas) {
  SuturedDiagram d;
  d.surface_ = std::move(surface);
  d.alphas_ = std::move(alphas);
  d.betas_ = std::move(betas);
  d.build();
  return d;
}

void SuturedDiagram::build() {
  const auto& s = surface_;
  const int nv = s.vertex_count();
  const int ne = s.edge_count();
  curve_of_edge_.assign(static_cast<std::size_t>(ne), -1);
  curve_position_.assign(static_cast<std::size_t>(ne), -1);
  alpha_at_vertex_.assign(static_cast<std::size_t>(nv), -1);
  beta_at_vertex_.assign(static_cast<std::size_t>(nv), -1);

  auto register_curves = [&](const std::vector<Curve>& curves, EdgeKind kind, std::vector<int>& at_vertex) {
    const std::string name = to_string(kind);
    for (int c = 0; c < static_cast<int>(curves.size()); ++c) {
      const auto& uses = curves[static_cast<std::size_t>(c)].edges;
      const std::string label = name + " curve " + std::to_string(c);
      if (uses.empty()) throw DiagramError(label + " is empty");
      std::set<int> visited;
      for (int k = 0; k < static_cast<int>(uses.size()); ++k) {
        const EdgeUse u = uses[static_cast<std::size_t>(k)];
        if (u.edge < 0 || u.edge >= ne) throw DiagramError(label + " references a missing edge");
        if (u.sign != 1 && u.sign != -1) throw DiagramError(label + " has a bad sign");
        if (s.edge(u.edge).kind != kind) throw DiagramError(label + " uses an edge of the wrong kind");
        if (curve_of_edge_[static_cast<std::size_t>(u.edge)] >= 0)
          throw DiagramError(label + " reuses edge " + std::to_string(u.edge));
        curve_of_edge_[static_cast<std::size_t>(u.edge)] = c;
        curve_position_[static_cast<std::size_t>(u.edge)] = k;
        const EdgeUse next = uses[static_cast<std::size_t>(wrap(k + 1, static_cast<int>(uses.size())))];
        if (s.use_end(u) != s.use_start(next)) throw DiagramError(label + " is not a closed walk");
        const int v = s.use_start(u);
        if (!visited.insert(v).second) throw DiagramError(label + " is not embedded");
        if (s.is_boundary_vertex(v)) throw DiagramError(label + " touches the boundary");
        if (at_vertex[static_cast<std::size_t>(v)] >= 0) throw DiagramError(name + " curves intersect");
        at_vertex[static_cast<std::size_t>(v)] = c;
      }
    }
  };
  register_curves(alphas_, EdgeKind::alpha, alpha_at_vertex_);
  register_curves(betas_, EdgeKind::beta, beta_at_vertex_);
  for (int e = 0; e < ne; ++e)
    if (is_curve_kind(s.edge(e).kind) && curve_of_edge_[static_cast<std::size_t>(e)] < 0)
      throw DiagramError("curve edge " + std::to_string(e) + " lies on no curve");

  // Regions.
  const int nf = s.face_count();
  UnionFind uf(nf);
  for (int e = 0; e < ne; ++e)
    if (s.edge(e).kind == EdgeKind::auxiliary) {
      const auto& occ = s.occurrences(e);
      uf.unite(occ[0].face, occ[1].face);
    }
  std::vector<int> root_to_region(static_cast<std::size_t>(nf), -1);
  regions_.clear();
  region_of_face_.assign(static_cast<std::size_t>(nf), -1);
  for (int f = 0; f < nf; ++f) {
    int& r = root_to_region[static_cast<std::size_t>(uf.find(f))];
    if (r < 0) {
      r = static_cast<int>(regions_.size());
      regions_.push_back({});
      regions_.back().interior = true;
    }
    region_of_face_[static_cast<std::size_t>(f)] = r;
    regions_[static_cast<std::size_t>(r)].faces.push_back(f);
    for (const auto& u : s.face(f).word)
      if (s.edge(u.edge).kind == EdgeKind::boundary) regions_[static_cast<std::size_t>(r)].interior = false;
  }
  for (auto& r : regions_) r.euler_characteristic = static_cast<int>(r.faces.size());
  for (int e = 0; e < ne; ++e)
    if (s.edge(e).kind == EdgeKind::auxiliary)
      --regions_[static_cast<std::size_t>(region_of_face(s.occurrences(e)[0].face))].euler_characteristic;
  for (int v = 0; v < nv; ++v) {
    if (s.is_boundary_vertex(v)) continue;
    bool all_aux = true;
    for (const auto& w : s.rotation(v))
      if (s.edge(s.use_at(w).edge).kind != EdgeKind::auxiliary) all_aux = false;
    if (all_aux) ++regions_[static_cast<std::size_t>(region_of_face(s.rotation(v).front().face))].euler_characteristic;
  }
  interior_regions_.clear();
  interior_index_.assign(regions_.size(), -1);
  for (int r = 0; r < static_cast<int>(regions_.size()); ++r)
    if (regions_[static_cast<std::size_t>(r)].interior) {
      interior_index_[static_cast<std::size_t>(r)] = static_cast<int>(interior_regions_.size());
      interior_regions_.push_back(r);
    }

  // Crossings and their quadrants.
  crossings_.clear();
  quadrants_.assign(static_cast<std::size_t>(nv), {});
  alpha_crossings_.assign(alphas_.size(), {});
  for (int v = 0; v < nv; ++v) {
    const auto& rot = s.rotation(v);
    const int n = static_cast<int>(rot.size());
    std::vector<EdgeKind> ends;
    for (const auto& w : rot)
      if (is_curve_kind(s.edge(s.use_at(w).edge).kind)) ends.push_back(s.edge(s.use_at(w).edge).kind);
    if (!is_crossing(v)) {
      const bool on_curve = alpha_at_vertex(v) >= 0 || beta_at_vertex(v) >= 0;
      if (on_curve && ends.size() != 2) throw DiagramError("curve vertex " + std::to_string(v) + " has extra curve edges");
      if (!on_curve && !ends.empty()) throw DiagramError("vertex " + std::to_string(v) + " has dangling curve edges");
      continue;
    }
    if (ends.size() != 4 || ends[0] == ends[1] || ends[1] == ends[2] || ends[2] == ends[3])
      throw DiagramError("curves do not cross transversely at vertex " + std::to_string(v));
    crossings_.push_back(v);
    alpha_crossings_[static_cast<std::size_t>(alpha_at_vertex(v))].push_back(v);
    int start = 0;
    while (!is_curve_kind(s.edge(s.incoming_at(rot[static_cast<std::size_t>(start)]).edge).kind)) ++start;
    CrossingQuadrant q;
    for (int k = 0; k < n; ++k) {
      const Wedge w = rot[static_cast<std::size_t>(wrap(start + k, n))];
      if (q.wedges.empty()) {
        q.incoming = s.incoming_at(w);
        q.region = region_of_face(w.face);
      }
      q.wedges.push_back(w);
      const EdgeUse out = s.use_at(w);
      if (is_curve_kind(s.edge(out.edge).kind)) {
        q.outgoing = out;
        ++regions_[static_cast<std::size_t>(q.region)].corners;
        quadrants_[static_cast<std::size_t>(v)].push_back(std::move(q));
        q = CrossingQuadrant{};
      }
    }
  }
}

std::optional<Wedge> SuturedDiagram::next_wedge(Wedge w) const {
  auto p = surface_.partner(w);
  if (!p) return std::nullopt;
  return Wedge{p->face, wrap(p->position + 1, static_cast<int>(surface_.face(p->face).word.size()))};
}

std::optional<EdgeUse> SuturedDiagram::turn_left(EdgeUse arriving) const {
  const int v = surface_.use_end(arriving);
  if (!is_crossing(v)) return std::nullopt;
  auto o = surface_.occurrence_of(arriving);
  if (!o) return std::nullopt;
  std::optional<Wedge> w = Wedge{o->face, wrap(o->position + 1, static_cast<int>(surface_.face(o->face).word.size()))};
  while (w && !is_curve_kind(surface_.edge(surface_.use_at(*w).edge).kind)) w = next_wedge(*w);
  if (!w) return std::nullopt;
  return surface_.use_at(*w);
}

EdgeUse SuturedDiagram::continue_along(EdgeUse u) const {
  const int c = curve_of_edge(u.edge);
  if (c < 0) throw DiagramError("edge is not on a curve");
  const auto& curve = surface_.edge(u.edge).kind == EdgeKind::alpha ? alphas_[static_cast<std::size_t>(c)]
                                                                      : betas_[static_cast<std::size_t>(c)];
  const int n = static_cast<int>(curve.edges.size());
  const int k = curve_position_[static_cast<std::size_t>(u.edge)];
  if (curve.edges[static_cast<std::size_t>(k)].sign == u.sign) return curve.edges[static_cast<std::size_t>(wrap(k + 1, n))];
  return curve.edges[static_cast<std::size_t>(wrap(k - 1, n))].reversed();
}

IntVector SuturedDiagram::cochain(const DualCycle& omega) const {
  IntVector c(static_cast<std::size_t>(surface_.edge_count()));
  for (const auto& u : omega.crossings) {
    if (u.edge < 0 || u.edge >= surface_.edge_count()) throw DiagramError("crossing references a missing edge");
    c[static_cast<std::size_t>(u.edge)] += u.sign;
  }
  return c;
}

std::vector<long long> SuturedDiagram::cochain_small(const DualCycle& omega) const {
  std::vector<long long> c(static_cast<std::size_t>(surface_.edge_count()), 0);
  for (const auto& u : omega.crossings) {
    if (u.edge < 0 || u.edge >= surface_.edge_count()) throw DiagramError("crossing references a missing edge");
    c[static_cast<std::size_t>(u.edge)] += u.sign;
  }
  return c;
}

void SuturedDiagram::check_cycle(const DualCycle& omega) const {
  for (const auto& u : omega.crossings)
    if (u.sign != 1 && u.sign != -1) throw DiagramError("crossing sign must be +1 or -1");
  const auto c = cochain_small(omega);
  for (int f = 0; f < surface_.face_count(); ++f) {
    long long sum = 0;
    for (const auto& u : surface_.face(f).word) sum += u.sign * c[static_cast<std::size_t>(u.edge)];
    if (sum != 0) throw DiagramError("dual cycle is not closed at face " + std::to_string(f));
  }
}

bool SuturedDiagram::is_path_ordered(const DualCycle& omega) const {
  const auto& cr = omega.crossings;
  const std::size_t n = cr.size();
  for (std::size_t k = 0; k < n; ++k) {
    auto arrive = surface_.occurrence_of(cr[k].reversed());
    auto depart = surface_.occurrence_of(cr[(k + 1) % n]);
    if (arrive.has_value() != depart.has_value()) return false;
    if (arrive && arrive->face != depart->face) return false;
  }
  return true;
}

DualCycle SuturedDiagram::cycle_from_cochain(const IntVector& c) const {
  DualCycle out;
  for (int e = 0; e < static_cast<int>(c.size()); ++e) {
    const BigInt& x = c[static_cast<std::size_t>(e)];
    const int sign = x > 0 ? 1 : -1;
    for (BigInt k = abs(x); k > 0; --k) out.crossings.push_back({e, sign});
  }
  return out;
}

DualCycle SuturedDiagram::vertex_loop(int v) const {
  DualCycle out;
  const auto& rot = surface_.rotation(v);
  if (surface_.is_boundary_vertex(v)) out.crossings.push_back(surface_.incoming_at(rot.front()).reversed());
  for (const auto& w : rot) out.crossings.push_back(surface_.use_at(w));
  return out;
}

SuturedDiagram SuturedDiagram::subdivide(int e) const {
  PolygonalComplex s = surface_.subdivide(e);
  const int e2 = surface_.edge_count();
  auto carry = [&](std::vector<Curve> curves) {
    for (auto& c : curves) {
      std::vector<EdgeUse> out;
      for (const auto& u : c.edges) {
        if (u.edge != e) {
          out.push_back(u);
        } else if (u.sign > 0) {
          out.push_back({e, 1});
          out.push_back({e2, 1});
        } else {
          out.push_back({e2, -1});
          out.push_back({e, -1});
        }
      }
      c.edges = std::move(out);
    }
    return curves;
  };
  return create(std::move(s), carry(alphas_), carry(betas_));
}

}  // namespace floersut
