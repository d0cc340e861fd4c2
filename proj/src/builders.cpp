#include "floersut/diagram.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace floersut {

namespace {

class Builder {
 public:
  int vertex() { return vertices_++; }
  int edge(int s, int t, EdgeKind k) {
    edges_.push_back({s, t, k});
    return static_cast<int>(edges_.size()) - 1;
  }
  int face(std::vector<EdgeUse> word) {
    faces_.push_back({std::move(word)});
    return static_cast<int>(faces_.size()) - 1;
  }
  PolygonalComplex finish() { return PolygonalComplex::create(vertices_, edges_, faces_); }
  int source(int e) const { return edges_[static_cast<std::size_t>(e)].source; }
  int target(int e) const { return edges_[static_cast<std::size_t>(e)].target; }

 private:
  int vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
};

EdgeUse fwd(int e) { return {e, 1}; }
EdgeUse bwd(int e) { return {e, -1}; }

int mod(int a, int n) { return ((a % n) + n) % n; }

// Cyclic membership of k in the half-open interval (from, to].
bool in_cyclic_range(int k, int from, int to, int n) {
  const int len = mod(to - from, n);
  const int off = mod(k - from, n);
  return off >= 1 && off <= len;
}

}  // namespace

YnDiagram build_yn_diagram(int n) {
  if (n < 1) throw DiagramError("Y_n needs n >= 1");
  Builder b;
  const int p = b.vertex();
  const int loop = b.edge(p, p, EdgeKind::boundary);
  std::vector<EdgeUse> outer = {fwd(loop)};
  std::vector<Curve> alphas, betas;
  YnDiagram out;
  std::vector<std::vector<EdgeUse>> bigons;
  for (int i = 0; i < n; ++i) {
    const int P = b.vertex();
    const int Q = b.vertex();
    const int a1 = b.edge(Q, P, EdgeKind::alpha);
    const int a2 = b.edge(P, Q, EdgeKind::alpha);
    const int b1 = b.edge(Q, P, EdgeKind::beta);
    const int b2 = b.edge(P, Q, EdgeKind::beta);
    const int cr = b.edge(p, P, EdgeKind::auxiliary);
    const int cl = b.edge(p, Q, EdgeKind::auxiliary);
    bigons.push_back({fwd(b1), bwd(a1)});
    bigons.push_back({fwd(a2), bwd(b2)});
    for (EdgeUse u : {fwd(cr), bwd(b1), bwd(a2), bwd(cr), fwd(cl), fwd(a1), fwd(b2), bwd(cl)}) outer.push_back(u);
    alphas.push_back({{fwd(a1), fwd(a2)}});
    betas.push_back({{fwd(b1), fwd(b2)}});
    out.omegas.push_back({{fwd(a1), fwd(b1)}});
  }
  b.face(outer);
  for (auto& w : bigons) b.face(w);
  out.diagram = SuturedDiagram::create(b.finish(), alphas, betas);
  return out;
}

int GridSpec::components() const {
  check();
  std::vector<int> column_of_x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) column_of_x[static_cast<std::size_t>(xs[static_cast<std::size_t>(i)])] = i;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int c = i; !seen[static_cast<std::size_t>(c)]; c = column_of_x[static_cast<std::size_t>(os[static_cast<std::size_t>(c)])])
      seen[static_cast<std::size_t>(c)] = true;
  }
  return cycles;
}

void GridSpec::check() const {
  if (n < 2) throw DiagramError("grid size must be at least 2");
  if (xs.size() != static_cast<std::size_t>(n) || os.size() != static_cast<std::size_t>(n))
    throw DiagramError("grid needs one X and one O per column");
  auto is_perm = [&](const std::vector<int>& v) {
    std::vector<int> s = v;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < n; ++i)
      if (s[static_cast<std::size_t>(i)] != i) return false;
    return true;
  };
  if (!is_perm(xs) || !is_perm(os)) throw DiagramError("grid markings must form permutations");
  for (int i = 0; i < n; ++i)
    if (xs[static_cast<std::size_t>(i)] == os[static_cast<std::size_t>(i)])
      throw DiagramError("X and O share a square in column " + std::to_string(i));
}

GridDiagram grid_to_diagram(const GridSpec& g, const std::optional<GridPatch>& patch) {
  g.check();
  const int n = g.n;
  std::vector<std::vector<bool>> marked(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    marked[static_cast<std::size_t>(i)][static_cast<std::size_t>(g.xs[static_cast<std::size_t>(i)])] = true;
    marked[static_cast<std::size_t>(i)][static_cast<std::size_t>(g.os[static_cast<std::size_t>(i)])] = true;
  }
  auto is_marked = [&](int i, int j) { return marked[static_cast<std::size_t>(mod(i, n))][static_cast<std::size_t>(mod(j, n))]; };
  if (patch) {
    const auto& pp = *patch;
    if (pp.col_a == pp.col_b || pp.row_1 == pp.row_2) throw DiagramError("degenerate patch");
    for (int c : {pp.col_a, pp.col_b})
      for (int r : {pp.row_1, pp.row_2})
        if (c < 0 || c >= n || r < 0 || r >= n || !is_marked(c, r))
          throw DiagramError("patch corners must be marked squares");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const bool corner = (i == pp.col_a || i == pp.col_b) && (j == pp.row_1 || j == pp.row_2);
        if (!corner && is_marked(i, j) && in_cyclic_range(i, pp.col_a, pp.col_b, n) &&
            in_cyclic_range(j, pp.row_1, pp.row_2, n))
          throw DiagramError("patch contains a marked square");
      }
  }
  auto h_split = [&](int i, int j) {
    return patch && (i == patch->col_a || i == patch->col_b) && in_cyclic_range(j, patch->row_1, patch->row_2, n);
  };
  auto v_split = [&](int i, int j) {
    return patch && (j == patch->row_1 || j == patch->row_2) && in_cyclic_range(i, patch->col_a, patch->col_b, n);
  };

  Builder b;
  std::vector<int> grid_vertex(static_cast<std::size_t>(n * n));
  for (auto& v : grid_vertex) v = b.vertex();
  auto V = [&](int i, int j) { return grid_vertex[static_cast<std::size_t>(mod(i, n) * n + mod(j, n))]; };
  // Horizontal (alpha) and vertical (beta) lines, as one or two halves.
  std::map<std::tuple<int, int, int>, std::vector<int>> line;  // (0=h / 1=v, i, j) -> edges in order
  std::map<std::tuple<int, int, int>, int> midpoint;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int dir = 0; dir < 2; ++dir) {
        const int s = V(i, j);
        const int t = dir == 0 ? V(i + 1, j) : V(i, j + 1);
        const EdgeKind k = dir == 0 ? EdgeKind::alpha : EdgeKind::beta;
        const bool split = dir == 0 ? h_split(i, j) : v_split(i, j);
        if (split) {
          const int m = b.vertex();
          midpoint[{dir, i, j}] = m;
          line[{dir, i, j}] = {b.edge(s, m, k), b.edge(m, t, k)};
        } else {
          line[{dir, i, j}] = {b.edge(s, t, k)};
        }
      }
    }
  auto forward = [&](int dir, int i, int j) {
    std::vector<EdgeUse> out;
    for (int e : line[{dir, mod(i, n), mod(j, n)}]) out.push_back(fwd(e));
    return out;
  };
  auto backward = [&](int dir, int i, int j) {
    std::vector<EdgeUse> out;
    const auto& es = line[{dir, mod(i, n), mod(j, n)}];
    for (auto it = es.rbegin(); it != es.rend(); ++it) out.push_back(bwd(*it));
    return out;
  };

  std::vector<Curve> alphas(static_cast<std::size_t>(n)), betas(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      auto h = forward(0, i, j);
      alphas[static_cast<std::size_t>(j)].edges.insert(alphas[static_cast<std::size_t>(j)].edges.end(), h.begin(), h.end());
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto v = forward(1, i, j);
      betas[static_cast<std::size_t>(i)].edges.insert(betas[static_cast<std::size_t>(i)].edges.end(), v.begin(), v.end());
    }

  GridDiagram out;
  std::vector<int> face_in_patch;
  // Path segments of the patch sides, created on first use per square side midpoint pair.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // Boundary of square (i, j), counterclockwise from its lower-left corner,
      // with the station vertex at the start of each use.
      std::vector<EdgeUse> ring;
      for (auto part : {forward(0, i, j), forward(1, i + 1, j), backward(0, i, j + 1), backward(1, i, j)})
        ring.insert(ring.end(), part.begin(), part.end());
      const int len = static_cast<int>(ring.size());
      auto station = [&](int k) {
        const EdgeUse u = ring[static_cast<std::size_t>(mod(k, len))];
        return u.sign > 0 ? b.source(u.edge) : b.target(u.edge);
      };
      auto index_of = [&](int vertex) {
        for (int k = 0; k < len; ++k)
          if (station(k) == vertex) return k;
        throw DiagramError("grid builder: missing station");
      };
      auto arc = [&](int from, int to) {  // uses from station `from` ccw to station `to`
        std::vector<EdgeUse> out_arc;
        for (int k = from; mod(k, len) != to; ++k) out_arc.push_back(ring[static_cast<std::size_t>(mod(k, len))]);
        return out_arc;
      };

      const bool in_col = patch && (i == patch->col_a || i == patch->col_b);
      const bool in_row = patch && (j == patch->row_1 || j == patch->row_2);
      const bool col_inside = patch && in_cyclic_range(j, patch->row_1, patch->row_2 - 1, n) && in_col;
      const bool row_inside = patch && in_cyclic_range(i, patch->col_a, patch->col_b - 1, n) && in_row;
      const bool corner = in_col && in_row;
      auto centre_in_patch = [&]() {
        return patch && in_cyclic_range(i, patch->col_a, patch->col_b - 1, n) &&
               in_cyclic_range(j, patch->row_1, patch->row_2 - 1, n);
      };

      if (is_marked(i, j)) {
        const int u = b.vertex();
        const int loop = b.edge(u, u, EdgeKind::boundary);
        if (!corner) {
          const int spoke = b.edge(V(i, j), u, EdgeKind::auxiliary);
          std::vector<EdgeUse> w = ring;
          for (EdgeUse x : {fwd(spoke), fwd(loop), bwd(spoke)}) w.push_back(x);
          b.face(w);
          face_in_patch.push_back(0);
          continue;
        }
        // Corner square: the A side runs vertically, the B side horizontally.
        const bool left_col = i == patch->col_a;
        const bool bottom_row = j == patch->row_1;
        const int mv = bottom_row ? midpoint[{0, i, mod(j + 1, n)}] : midpoint[{0, i, j}];
        const int mh = left_col ? midpoint[{1, mod(i + 1, n), j}] : midpoint[{1, i, j}];
        const int ea = bottom_row ? b.edge(u, mv, EdgeKind::auxiliary) : b.edge(mv, u, EdgeKind::auxiliary);
        const int eb = left_col ? b.edge(u, mh, EdgeKind::auxiliary) : b.edge(mh, u, EdgeKind::auxiliary);
        out.a_edges.push_back(ea);
        out.b_edges.push_back(eb);
        // Inner corner station of the square.
        const int inner = left_col ? (bottom_row ? V(i + 1, j + 1) : V(i + 1, j)) : (bottom_row ? V(i, j + 1) : V(i, j));
        const int kv = index_of(mv), kh = index_of(mh), ki = index_of(inner);
        auto contains = [&](int from, int to, int k) { return in_cyclic_range(k, from, to - 1, len) || k == from; };
        int first = kv, second = kh;
        if (!contains(first, second, ki)) std::swap(first, second);
        auto use_to_u = [&](int vertex) { return vertex == mv ? (bottom_row ? bwd(ea) : fwd(ea)) : (left_col ? bwd(eb) : fwd(eb)); };
        auto use_from_u = [&](int vertex) { return vertex == mv ? (bottom_row ? fwd(ea) : bwd(ea)) : (left_col ? fwd(eb) : bwd(eb)); };
        const int sv = station(first), tv = station(second);
        std::vector<EdgeUse> pw = arc(first, second);
        pw.push_back(use_to_u(tv));
        pw.push_back(use_from_u(sv));
        b.face(pw);
        face_in_patch.push_back(1);
        std::vector<EdgeUse> ow = arc(second, first);
        ow.push_back(use_to_u(sv));
        ow.push_back(fwd(loop));
        ow.push_back(use_from_u(tv));
        b.face(ow);
        face_in_patch.push_back(0);
        continue;
      }
      if (col_inside || row_inside) {
        // Through path: vertical from bottom midpoint to top midpoint, or
        // horizontal from left midpoint to right midpoint.
        int ms, mt;
        if (col_inside) {
          ms = midpoint[{0, i, j}];
          mt = midpoint[{0, i, mod(j + 1, n)}];
        } else {
          ms = midpoint[{1, i, j}];
          mt = midpoint[{1, mod(i + 1, n), j}];
        }
        const int e = b.edge(ms, mt, EdgeKind::auxiliary);
        (col_inside ? out.a_edges : out.b_edges).push_back(e);
        const int ks = index_of(ms), kt = index_of(mt);
        std::vector<EdgeUse> w1 = arc(ks, kt);
        w1.push_back(bwd(e));
        std::vector<EdgeUse> w2 = arc(kt, ks);
        w2.push_back(fwd(e));
        // w1 is right of a vertical path and below a horizontal one.
        bool w1_in;
        if (col_inside)
          w1_in = i == patch->col_a;
        else
          w1_in = j == patch->row_2;
        b.face(w1);
        face_in_patch.push_back(w1_in ? 1 : 0);
        b.face(w2);
        face_in_patch.push_back(w1_in ? 0 : 1);
        continue;
      }
      b.face(ring);
      face_in_patch.push_back(centre_in_patch() ? 1 : 0);
    }
  out.diagram = SuturedDiagram::create(b.finish(), alphas, betas);
  for (int f = 0; f < static_cast<int>(face_in_patch.size()); ++f)
    if (face_in_patch[static_cast<std::size_t>(f)]) out.patch_faces.push_back(f);
  return out;
}

DualCycle shift_cycle(const DualCycle& omega, int edge_offset) {
  DualCycle out = omega;
  for (auto& u : out.crossings) u.edge += edge_offset;
  return out;
}

SuturedDiagram disjoint_union(const SuturedDiagram& a, const SuturedDiagram& b) {
  const auto& sa = a.surface();
  const auto& sb = b.surface();
  const int vo = sa.vertex_count(), eo = sa.edge_count();
  std::vector<Edge> edges = sa.edges();
  for (auto e : sb.edges()) {
    e.source += vo;
    e.target += vo;
    edges.push_back(e);
  }
  std::vector<Face> faces = sa.faces();
  for (auto f : sb.faces()) {
    for (auto& u : f.word) u.edge += eo;
    faces.push_back(f);
  }
  auto shift = [&](std::vector<Curve> cs) {
    for (auto& c : cs)
      for (auto& u : c.edges) u.edge += eo;
    return cs;
  };
  std::vector<Curve> alphas = a.alphas(), betas = a.betas();
  for (auto& c : shift(b.alphas())) alphas.push_back(c);
  for (auto& c : shift(b.betas())) betas.push_back(c);
  return SuturedDiagram::create(PolygonalComplex::create(vo + sb.vertex_count(), edges, faces), alphas, betas);
}

}  // namespace floersut
