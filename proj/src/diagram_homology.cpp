#include "floersut/diagram.hpp"
#include "floersut/lp.hpp"

#include <numeric>

namespace floersut {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

int find_root(std::vector<int>& p, int x) {
  while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
  return x;
}

// Every component of the surface cut along curves of one kind meets the boundary.
bool cut_components_reach_boundary(const PolygonalComplex& s, EdgeKind cut) {
  std::vector<int> parent(static_cast<std::size_t>(s.face_count()));
  std::iota(parent.begin(), parent.end(), 0);
  for (int e = 0; e < s.edge_count(); ++e) {
    if (s.edge(e).kind == cut || s.is_boundary_edge(e)) continue;
    const auto& occ = s.occurrences(e);
    parent[static_cast<std::size_t>(find_root(parent, occ[0].face))] = find_root(parent, occ[1].face);
  }
  std::vector<bool> reaches(parent.size(), false);
  for (int f = 0; f < s.face_count(); ++f)
    for (const auto& u : s.face(f).word)
      if (s.is_boundary_edge(u.edge)) reaches[static_cast<std::size_t>(find_root(parent, f))] = true;
  for (int f = 0; f < s.face_count(); ++f)
    if (!reaches[static_cast<std::size_t>(find_root(parent, f))]) return false;
  return true;
}

}  // namespace

IntMatrix alpha_corner_matrix(const SuturedDiagram& d) {
  const auto& s = d.surface();
  const auto& interior = d.interior_regions();
  IntMatrix m(static_cast<std::size_t>(s.vertex_count()), interior.size());
  for (std::size_t r = 0; r < interior.size(); ++r)
    for (int f : d.regions()[static_cast<std::size_t>(interior[r])].faces)
      for (const auto& u : s.face(f).word)
        if (s.edge(u.edge).kind == EdgeKind::alpha) {
          m(static_cast<std::size_t>(s.use_end(u)), r) += 1;
          m(static_cast<std::size_t>(s.use_start(u)), r) -= 1;
        }
  return m;
}

std::optional<std::vector<BigInt>> find_nonnegative_periodic_domain(const SuturedDiagram& d) {
  const IntMatrix m = alpha_corner_matrix(d);
  const std::size_t n = m.cols();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> row(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = Rational(m(i, j));
      nonzero = nonzero || m(i, j) != 0;
    }
    if (nonzero) {
      a.push_back(std::move(row));
      b.push_back(0);
    }
  }
  a.push_back(std::vector<Rational>(n, Rational(1)));
  b.push_back(1);
  auto x = find_nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  BigInt l = 1;
  for (const auto& q : *x) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
  std::vector<BigInt> out;
  for (const auto& q : *x) out.push_back(boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q)));
  return out;
}

ValidationReport validate_diagram(const SuturedDiagram& d) {
  ValidationReport r;
  const auto& s = d.surface();
  r.balanced = d.alphas().size() == d.betas().size();
  if (!r.balanced) r.messages.push_back("numbers of alpha and beta curves differ");
  if (!cut_components_reach_boundary(s, EdgeKind::alpha) || !cut_components_reach_boundary(s, EdgeKind::beta)) {
    r.balanced = false;
    r.messages.push_back("a component of the surface cut along the alpha or beta curves misses the boundary");
  }
  r.every_component_has_boundary = true;
  for (const auto& c : s.components())
    if (c.boundary_circles == 0) r.every_component_has_boundary = false;
  if (!r.every_component_has_boundary) r.messages.push_back("a surface component has empty boundary");
  r.nice = true;
  for (int reg : d.interior_regions()) {
    const auto& region = d.regions()[static_cast<std::size_t>(reg)];
    if (region.euler_characteristic != 1 || (region.corners != 2 && region.corners != 4)) {
      r.nice = false;
      r.non_nice_region = reg;
      r.messages.push_back("interior region " + std::to_string(reg) + " is not a bigon or rectangle");
      break;
    }
  }
  r.periodic_witness = find_nonnegative_periodic_domain(d);
  r.admissible = !r.periodic_witness;
  if (!r.admissible) r.messages.push_back("a nonzero periodic domain has only nonnegative coefficients");
  return r;
}

IntMatrix cocycles_vanishing_on(const SuturedDiagram& d, EdgeKind kind) {
  const auto& s = d.surface();
  const IntMatrix delta1 = s.coboundary1();
  std::vector<std::size_t> keep;
  for (int e = 0; e < s.edge_count(); ++e)
    if (s.edge(e).kind != kind) keep.push_back(static_cast<std::size_t>(e));
  const IntMatrix kb = kernel_basis(smith_normal_form(delta1.columns(keep)));
  IntMatrix out(static_cast<std::size_t>(s.edge_count()), kb.cols());
  for (std::size_t j = 0; j < kb.cols(); ++j)
    for (std::size_t i = 0; i < keep.size(); ++i) out(keep[i], j) = kb(i, j);
  return out;
}

IntVector curve_pushoff(const SuturedDiagram& d, const Curve& curve) {
  const auto& s = d.surface();
  IntVector c(static_cast<std::size_t>(s.edge_count()));
  const int n = static_cast<int>(curve.edges.size());
  for (int k = 0; k < n; ++k) {
    const EdgeUse in = curve.edges[static_cast<std::size_t>(k)];
    const EdgeUse out = curve.edges[static_cast<std::size_t>(wrap(k + 1, n))];
    const Occurrence stop = *s.occurrence_of(in);
    const Occurrence o = *s.occurrence_of(out);
    Wedge w{o.face, o.position};
    for (std::size_t guard = 0;; ++guard) {
      const int len = static_cast<int>(s.face(w.face).word.size());
      const Occurrence incoming{w.face, wrap(w.position - 1, len)};
      if (incoming == stop) break;
      if (guard > s.rotation(s.wedge_vertex(w)).size()) throw DiagramError("pushoff rotation failed");
      const EdgeUse i = s.use_at(incoming);
      c[static_cast<std::size_t>(i.edge)] += i.sign;
      auto p = s.partner(incoming);
      if (!p) throw DiagramError("curve vertex on the boundary");
      w = Wedge{p->face, p->position};
    }
  }
  d.check_cycle(d.cycle_from_cochain(c));
  return c;
}

IntVector RelativeHomology::cocycle_coordinates(const IntVector& cochain) const {
  return kernel_coordinates(cocycle_form, cochain);
}

RelativeHomology relative_h1(const SuturedDiagram& d) {
  const auto& s = d.surface();
  RelativeHomology h;
  const IntMatrix delta1 = s.coboundary1();
  h.cocycle_form = smith_normal_form(delta1);
  const IntMatrix z = kernel_basis(h.cocycle_form);
  const std::size_t k = z.cols();

  std::vector<IntVector> exact;
  const IntMatrix delta0 = s.coboundary0();
  for (std::size_t v = 0; v < delta0.cols(); ++v) exact.push_back(h.cocycle_coordinates(delta0.column(v)));

  auto vanishing_on = [&](EdgeKind kind) {
    const IntMatrix kb = cocycles_vanishing_on(d, kind);
    std::vector<IntVector> out;
    for (std::size_t j = 0; j < kb.cols(); ++j) out.push_back(h.cocycle_coordinates(kb.column(j)));
    return out;
  };

  std::vector<IntVector> pushoffs;
  for (const auto& c : d.alphas()) pushoffs.push_back(h.cocycle_coordinates(curve_pushoff(d, c)));
  for (const auto& c : d.betas()) pushoffs.push_back(h.cocycle_coordinates(curve_pushoff(d, c)));

  auto concat = [](std::vector<IntVector> a, const std::vector<IntVector>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  h.h1_surface_rel_boundary = present_quotient(k, IntMatrix::from_columns(k, exact));
  h.h1_m_gamma = present_quotient(k, IntMatrix::from_columns(k, concat(exact, pushoffs)));
  h.h1_m_boundary =
      present_quotient(k, IntMatrix::from_columns(k, concat(concat(exact, vanishing_on(EdgeKind::alpha)), vanishing_on(EdgeKind::beta))));
  h.quotient_map_surjective = true;
  for (const auto& p : pushoffs)
    if (!h.h1_m_boundary.is_zero(p)) h.quotient_map_surjective = false;

  for (std::size_t i = 0; i < h.h1_m_boundary.free_rank; ++i)
    h.free_basis.push_back(d.cycle_from_cochain(z.apply(h.h1_m_boundary.free_generator(i))));
  return h;
}

IntVector class_of_cycle(const SuturedDiagram& d, const RelativeHomology& h, const DualCycle& omega) {
  d.check_cycle(omega);
  return h.h1_m_boundary.free_coordinates(h.cocycle_coordinates(d.cochain(omega)));
}

}  // namespace floersut
