#include "floersut/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>

namespace floersut {

namespace {

struct OccurrenceLess {
  bool operator()(const Occurrence& a, const Occurrence& b) const {
    return a.face != b.face ? a.face < b.face : a.position < b.position;
  }
};

class DiskFinder {
 public:
  DiskFinder(const SuturedDiagram& d, const GeneratorSet& gens) : d_(d), s_(d.surface()), gens_(gens) {}

  void from(int gi, std::vector<Disk>& out) const {
    const Generator& x = gens_.generators[static_cast<std::size_t>(gi)];
    std::vector<int> beta_point(d_.betas().size(), -1);
    for (int p : x) beta_point[static_cast<std::size_t>(d_.beta_at_vertex(p))] = p;
    for (int i = 0; i < static_cast<int>(x.size()); ++i) {
      const int p1 = x[static_cast<std::size_t>(i)];
      for (const auto& q : d_.quadrants(p1)) {
        if (kind(q.incoming) != EdgeKind::beta || kind(q.outgoing) != EdgeKind::alpha) continue;
        walk_from_corner(gi, x, beta_point, i, p1, q.outgoing, out);
      }
    }
  }

 private:
  EdgeKind kind(EdgeUse u) const { return s_.edge(u.edge).kind; }

  // Uses along a curve starting with `first`, ending at the first arrival at `stop`.
  std::optional<std::vector<EdgeUse>> walk_to(EdgeUse first, int stop) const {
    std::vector<EdgeUse> path;
    EdgeUse u = first;
    const std::size_t limit = static_cast<std::size_t>(s_.edge_count());
    for (;;) {
      path.push_back(u);
      if (s_.use_end(u) == stop) return path;
      if (path.size() > limit) return std::nullopt;
      u = d_.continue_along(u);
    }
  }

  void walk_from_corner(int gi, const Generator& x, const std::vector<int>& beta_point, int i, int p1, EdgeUse a_start,
                        std::vector<Disk>& out) const {
    const int k = d_.beta_at_vertex(p1);
    std::vector<EdgeUse> arc1;
    EdgeUse u = a_start;
    for (;;) {
      arc1.push_back(u);
      const int q1 = s_.use_end(u);
      if (q1 == p1) break;
      if (d_.is_crossing(q1)) {
        const int l = d_.beta_at_vertex(q1);
        auto b_turn = d_.turn_left(u);
        if (b_turn && kind(*b_turn) == EdgeKind::beta) {
          if (l == k) {
            auto arc2 = walk_to(*b_turn, p1);
            if (arc2 && closes(*arc2, a_start)) {
              Generator y = x;
              y[static_cast<std::size_t>(i)] = q1;
              try_disk(gi, x, y, {arc1, *arc2}, {p1, q1}, 2, out);
            }
          } else if (beta_point[static_cast<std::size_t>(l)] != q1) {
            const int p2 = beta_point[static_cast<std::size_t>(l)];
            auto arc2 = walk_to(*b_turn, p2);
            if (arc2) rectangles_from(gi, x, i, p1, q1, p2, a_start, arc1, *arc2, out);
          }
        }
      }
      u = d_.continue_along(u);
      if (arc1.size() > static_cast<std::size_t>(s_.edge_count())) break;
    }
  }

  void rectangles_from(int gi, const Generator& x, int i, int p1, int q1, int p2, EdgeUse a_start,
                       const std::vector<EdgeUse>& arc1, const std::vector<EdgeUse>& arc2,
                       std::vector<Disk>& out) const {
    const int j = d_.alpha_at_vertex(p2);
    if (j <= i) return;  // each rectangle is found from its x-corner on the lower alpha
    auto a2 = d_.turn_left(arc2.back());
    if (!a2 || kind(*a2) != EdgeKind::alpha) return;
    const int k = d_.beta_at_vertex(p1);
    std::vector<EdgeUse> arc3;
    EdgeUse u = *a2;
    for (;;) {
      arc3.push_back(u);
      const int q2 = s_.use_end(u);
      if (q2 == p2) break;
      if (d_.is_crossing(q2) && d_.beta_at_vertex(q2) == k) {
        auto b2 = d_.turn_left(u);
        if (b2 && kind(*b2) == EdgeKind::beta) {
          auto arc4 = walk_to(*b2, p1);
          if (arc4 && closes(*arc4, a_start)) {
            Generator y = x;
            y[static_cast<std::size_t>(i)] = q1;
            y[static_cast<std::size_t>(j)] = q2;
            try_disk(gi, x, y, {arc1, arc2, arc3, *arc4}, {p1, q1, p2, q2}, 4, out);
          }
        }
      }
      u = d_.continue_along(u);
      if (arc3.size() > static_cast<std::size_t>(s_.edge_count())) break;
    }
  }

  bool closes(const std::vector<EdgeUse>& last_arc, EdgeUse a_start) const {
    auto t = d_.turn_left(last_arc.back());
    return t && *t == a_start;
  }

  void try_disk(int gi, const Generator& x, const Generator& y, const std::vector<std::vector<EdgeUse>>& arcs,
                const std::vector<int>& corners, int corner_count, std::vector<Disk>& out) const {
    const int to = gens_.find(y);
    if (to < 0) return;
    std::vector<EdgeUse> loop;
    for (const auto& a : arcs) loop.insert(loop.end(), a.begin(), a.end());

    std::set<Occurrence, OccurrenceLess> loop_occ;
    std::vector<long long> loop_chain(static_cast<std::size_t>(s_.edge_count()), 0);
    for (const auto& u : loop) {
      auto o = s_.occurrence_of(u);
      if (!o) return;
      loop_occ.insert(*o);
      loop_chain[static_cast<std::size_t>(u.edge)] += u.sign;
    }
    std::vector<char> in_d(static_cast<std::size_t>(s_.face_count()), 0);
    std::vector<int> stack;
    for (const auto& o : loop_occ)
      if (!in_d[static_cast<std::size_t>(o.face)]) {
        in_d[static_cast<std::size_t>(o.face)] = 1;
        stack.push_back(o.face);
      }
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      if (d_.interior_index(d_.region_of_face(f)) < 0) return;
      const int len = static_cast<int>(s_.face(f).word.size());
      for (int k = 0; k < len; ++k) {
        const Occurrence o{f, k};
        if (loop_occ.count(o)) continue;
        auto p = s_.partner(o);
        if (!p || loop_occ.count(*p)) return;
        if (!in_d[static_cast<std::size_t>(p->face)]) {
          in_d[static_cast<std::size_t>(p->face)] = 1;
          stack.push_back(p->face);
        }
      }
    }
    std::vector<long long> chain(static_cast<std::size_t>(s_.edge_count()), 0);
    std::vector<int> faces;
    for (int f = 0; f < s_.face_count(); ++f) {
      if (!in_d[static_cast<std::size_t>(f)]) continue;
      faces.push_back(f);
      for (const auto& u : s_.face(f).word) chain[static_cast<std::size_t>(u.edge)] += u.sign;
    }
    if (chain != loop_chain) return;
    // Euler characteristic of the open domain.
    long long chi = static_cast<long long>(faces.size());
    for (int e = 0; e < s_.edge_count(); ++e) {
      const auto& occ = s_.occurrences(e);
      if (occ.size() == 2 && in_d[static_cast<std::size_t>(occ[0].face)] && in_d[static_cast<std::size_t>(occ[1].face)]) --chi;
    }
    std::set<int> corner_set(corners.begin(), corners.end());
    if (static_cast<int>(corner_set.size()) != corner_count) return;
    for (int v = 0; v < s_.vertex_count(); ++v) {
      bool all = true;
      for (const auto& w : s_.rotation(v)) all = all && in_d[static_cast<std::size_t>(w.face)];
      if (all && !s_.is_boundary_vertex(v)) ++chi;
    }
    if (chi != 1) return;
    auto quadrants_inside = [&](int v) {
      int c = 0;
      for (const auto& q : d_.quadrants(v))
        if (in_d[static_cast<std::size_t>(q.wedges.front().face)]) ++c;
      return c;
    };
    for (int v : corners)
      if (quadrants_inside(v) != 1) return;
    for (int p : x)
      if (!corner_set.count(p) && quadrants_inside(p) != 0) return;

    Disk disk;
    disk.from = gi;
    disk.to = to;
    disk.corners = corner_count;
    disk.faces = std::move(faces);
    disk.boundary = loop;
    for (const auto& u : loop)
      if (kind(u) == EdgeKind::alpha) disk.alpha_boundary.push_back(u);
    out.push_back(std::move(disk));
  }

  const SuturedDiagram& d_;
  const PolygonalComplex& s_;
  const GeneratorSet& gens_;
};

}  // namespace

int GeneratorSet::find(const Generator& x) const {
  auto it = index.find(x);
  return it == index.end() ? -1 : it->second;
}

GeneratorSet enumerate_generators(const SuturedDiagram& d) {
  GeneratorSet out;
  const std::size_t n = d.alphas().size();
  if (n != d.betas().size()) return out;
  Generator current(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.index.emplace(current, static_cast<int>(out.generators.size()));
      out.generators.push_back(current);
      return;
    }
    for (int v : d.crossings_on_alpha(static_cast<int>(i))) {
      const int b = d.beta_at_vertex(v);
      if (used[static_cast<std::size_t>(b)]) continue;
      used[static_cast<std::size_t>(b)] = true;
      current[i] = v;
      self(self, i + 1);
      used[static_cast<std::size_t>(b)] = false;
    }
  };
  rec(rec, 0);
  return out;
}

int default_thread_count() {
  if (const char* env = std::getenv("FLOERSUT_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

std::vector<Disk> enumerate_disks(const SuturedDiagram& d, const GeneratorSet& gens, int threads) {
  const int n = static_cast<int>(gens.size());
  threads = std::max(1, std::min(threads, n));
  DiskFinder finder(d, gens);
  std::vector<std::vector<Disk>> parts(static_cast<std::size_t>(threads));
  auto work = [&](int t) {
    const int lo = n * t / threads, hi = n * (t + 1) / threads;
    for (int g = lo; g < hi; ++g) finder.from(g, parts[static_cast<std::size_t>(t)]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::vector<Disk> out;
  for (auto& p : parts)
    for (auto& disk : p) out.push_back(std::move(disk));
  return out;
}

SparseGf2Map differential_matrix(std::size_t generator_count, const std::vector<Disk>& disks) {
  SparseGf2Map m(generator_count, generator_count);
  for (const auto& disk : disks) m.toggle(static_cast<std::size_t>(disk.to), static_cast<std::size_t>(disk.from));
  return m;
}

long long disk_weight(const std::vector<long long>& cochain, const Disk& disk) {
  long long w = 0;
  for (const auto& u : disk.alpha_boundary) w += u.sign * cochain[static_cast<std::size_t>(u.edge)];
  return w;
}

SparseGf2Map action_matrix(const SuturedDiagram& d, std::size_t generator_count, const std::vector<Disk>& disks,
                           const DualCycle& omega) {
  d.check_cycle(omega);
  const auto c = d.cochain_small(omega);
  SparseGf2Map m(generator_count, generator_count);
  for (const auto& disk : disks)
    if (disk_weight(c, disk) % 2 != 0) m.toggle(static_cast<std::size_t>(disk.to), static_cast<std::size_t>(disk.from));
  return m;
}

namespace {

IntVector point_chain(const SuturedDiagram& d, const Generator& x) {
  IntVector v(static_cast<std::size_t>(d.surface().vertex_count()));
  for (int p : x) v[static_cast<std::size_t>(p)] += 1;
  return v;
}

}  // namespace

SpincPartition spinc_partition(const SuturedDiagram& d, const GeneratorSet& gens) {
  SpincPartition out;
  const SmithForm snf = smith_normal_form(alpha_corner_matrix(d));
  std::map<IntVector, int> by_label;
  for (const auto& x : gens.generators) {
    IntVector label = snf.left.apply(point_chain(d, x));
    for (std::size_t i = 0; i < snf.rank; ++i) {
      label[i] %= snf.diagonal[i];
      if (label[i] < 0) label[i] += snf.diagonal[i];
    }
    auto [it, inserted] = by_label.emplace(label, static_cast<int>(out.members.size()));
    if (inserted) {
      out.members.emplace_back();
      out.labels.push_back(label);
    }
    out.class_of.push_back(it->second);
    out.members[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(out.class_of.size()) - 1);
  }
  return out;
}

std::optional<IntVector> connecting_domain(const SuturedDiagram& d, const Generator& x, const Generator& y) {
  const SmithForm snf = smith_normal_form(alpha_corner_matrix(d));
  IntVector rhs = point_chain(d, y);
  const IntVector px = point_chain(d, x);
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= px[i];
  return solve_integer(snf, rhs);
}

Rational combinatorial_index(const SuturedDiagram& d, const IntVector& domain, const Generator& x, const Generator& y) {
  const auto& interior = d.interior_regions();
  Rational mu = 0;
  for (std::size_t r = 0; r < interior.size(); ++r) {
    const auto& region = d.regions()[static_cast<std::size_t>(interior[r])];
    mu += Rational(domain[r]) * (Rational(region.euler_characteristic) - Rational(region.corners, 4));
  }
  auto point_measure = [&](int p) {
    Rational m = 0;
    for (const auto& q : d.quadrants(p)) {
      const int idx = d.interior_index(q.region);
      if (idx >= 0) m += Rational(domain[static_cast<std::size_t>(idx)], 4);
    }
    return m;
  };
  for (int p : x) mu += point_measure(p);
  for (int p : y) mu += point_measure(p);
  return mu;
}

IntVector disk_domain(const SuturedDiagram& d, const Disk& disk) {
  IntVector out(d.interior_regions().size());
  std::set<int> regions;
  for (int f : disk.faces) regions.insert(d.region_of_face(f));
  for (int r : regions) out[static_cast<std::size_t>(d.interior_index(r))] = 1;
  return out;
}

}  // namespace floersut
