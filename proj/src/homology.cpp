#include "floersut/homology.hpp"

#include <algorithm>

namespace floersut {

namespace {

Gf2Vector column_vector(const SparseGf2Map& m, std::size_t j) {
  Gf2Vector v(m.rows());
  for (std::size_t i : m.column(j)) v.set(i);
  return v;
}

SparseGf2Map from_columns(std::size_t rows, const std::vector<Gf2Vector>& cols) {
  SparseGf2Map m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i : cols[j].support()) m.toggle(i, j);
  return m;
}

}  // namespace

HomologyData::HomologyData(const SparseGf2Map& differential, const SpincPartition& partition)
    : differential_(differential) {
  const std::size_t n = differential.cols();
  if (differential.rows() != n) throw HomologyError("differential is not square");
  if (!(differential * differential).is_zero()) throw HomologyError("differential does not square to zero");
  boundaries_ = Gf2Echelon(n, 0);
  for (std::size_t j = 0; j < n; ++j) boundaries_.insert(column_vector(differential, j));

  std::vector<int> local(n, -1);
  for (std::size_t c = 0; c < partition.members.size(); ++c) {
    const auto& members = partition.members[c];
    const std::size_t k = members.size();
    for (std::size_t a = 0; a < k; ++a) local[static_cast<std::size_t>(members[a])] = static_cast<int>(a);
    SparseGf2Map block(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t i : differential.column(static_cast<std::size_t>(members[a]))) {
        if (partition.class_of[i] != static_cast<int>(c)) throw HomologyError("differential crosses Spin^c classes");
        block.toggle(static_cast<std::size_t>(local[i]), a);
      }
    Gf2Echelon span(k, 0);
    for (std::size_t a = 0; a < k; ++a) span.insert(column_vector(block, a));
    std::size_t rank = 0;
    for (auto& z : gf2_kernel(block)) {
      if (!span.insert(z)) continue;
      Gf2Vector global(n);
      for (std::size_t a : z.support()) global.set(static_cast<std::size_t>(members[a]));
      basis_.push_back(std::move(global));
      basis_class_.push_back(static_cast<int>(c));
      ++rank;
    }
    class_ranks_.push_back(rank);
  }
  reducer_ = Gf2Echelon(n, basis_.size());
  for (std::size_t j = 0; j < n; ++j) reducer_.insert(column_vector(differential, j));
  for (std::size_t b = 0; b < basis_.size(); ++b) reducer_.insert(basis_[b], Gf2Vector::unit(basis_.size(), b));
}

Gf2Vector HomologyData::coordinates(const Gf2Vector& cycle) const {
  if (!differential_.apply(cycle).is_zero()) throw HomologyError("chain is not a cycle");
  auto [residue, tag] = reducer_.reduce(cycle);
  if (!residue.is_zero()) throw HomologyError("cycle outside the computed span");
  return tag;
}

bool HomologyData::is_boundary(const Gf2Vector& chain) const { return boundaries_.contains(chain); }

SparseGf2Map induced_map(const SparseGf2Map& f, const HomologyData& source, const HomologyData& target) {
  if (f.cols() != source.differential().cols() || f.rows() != target.differential().rows())
    throw HomologyError("chain map has the wrong shape");
  if (!(f * source.differential() == target.differential() * f)) throw HomologyError("map is not a chain map");
  std::vector<Gf2Vector> cols;
  for (const auto& z : source.basis()) cols.push_back(target.coordinates(f.apply(z)));
  return from_columns(target.total_rank(), cols);
}

SparseGf2Map class_block(const SparseGf2Map& m, const HomologyData& h, int cls) {
  std::vector<std::size_t> idx;
  std::vector<int> pos(h.total_rank(), -1);
  for (std::size_t b = 0; b < h.total_rank(); ++b)
    if (h.basis_class()[b] == cls) {
      pos[b] = static_cast<int>(idx.size());
      idx.push_back(b);
    }
  SparseGf2Map out(idx.size(), idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i : m.column(idx[j]))
      if (pos[i] >= 0) out.toggle(static_cast<std::size_t>(pos[i]), j);
  return out;
}

bool SFHModule::all_properties_hold() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyCheck& p) { return p.passed; });
}

SFHModule chain_complex(const SuturedDiagram& d, int threads) {
  SFHModule m;
  m.generators = enumerate_generators(d);
  m.spinc = spinc_partition(d, m.generators);
  m.disks = enumerate_disks(d, m.generators, threads);
  m.differential = differential_matrix(m.generators.size(), m.disks);
  m.homology = HomologyData(m.differential, m.spinc);
  m.properties.push_back({"differential squares to zero", true});
  return m;
}

SFHModule module_structure(const SuturedDiagram& d, std::vector<DualCycle> h1_basis, int threads) {
  const auto v = validate_diagram(d);
  if (!v.ok()) {
    std::string msg = "invalid diagram";
    for (const auto& s : v.messages) msg += ": " + s;
    throw DiagramError(msg);
  }
  SFHModule m = chain_complex(d, threads);
  m.h1_basis = h1_basis.empty() ? relative_h1(d).free_basis : std::move(h1_basis);
  const std::size_t n = m.generators.size();
  for (std::size_t i = 0; i < m.h1_basis.size(); ++i) {
    SparseGf2Map a = action_matrix(d, n, m.disks, m.h1_basis[i]);
    const bool chain_map = a * m.differential == m.differential * a;
    m.properties.push_back({"A_" + std::to_string(i + 1) + " is a chain map", chain_map});
    if (!chain_map) throw HomologyError("action map is not a chain map");
    m.action.push_back(induced_map(a, m.homology, m.homology));
    m.chain_actions.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < m.action.size(); ++i) {
    m.properties.push_back({"A_" + std::to_string(i + 1) + "^2 = 0", (m.action[i] * m.action[i]).is_zero()});
    for (std::size_t j = i + 1; j < m.action.size(); ++j)
      m.properties.push_back({"A_" + std::to_string(i + 1) + " A_" + std::to_string(j + 1) + " anticommute",
                              (m.action[i] * m.action[j] + m.action[j] * m.action[i]).is_zero()});
  }
  return m;
}

HomotopyResult homotopy_witness(const SuturedDiagram& d, const SFHModule& cx, const DualCycle& omega1,
                                const DualCycle& omega2) {
  d.check_cycle(omega1);
  d.check_cycle(omega2);
  const RelativeHomology rh = relative_h1(d);
  const IntVector c1 = d.cochain(omega1), c2 = d.cochain(omega2);
  IntVector diff(c1.size());
  for (std::size_t e = 0; e < diff.size(); ++e) diff[e] = c2[e] - c1[e];
  const IntVector coords = rh.cocycle_coordinates(diff);
  for (const auto& x : rh.h1_m_boundary.free_coordinates(coords))
    if (x != 0) throw HomologyError("cycles are not homologous modulo torsion");

  HomotopyResult out;
  out.torsion_order = rh.h1_m_boundary.order_of(coords);
  const std::size_t n = cx.generators.size();
  const SparseGf2Map a1 = action_matrix(d, n, cx.disks, omega1);
  const SparseGf2Map a2 = action_matrix(d, n, cx.disks, omega2);
  out.induced_maps_equal = induced_map(a1, cx.homology, cx.homology) == induced_map(a2, cx.homology, cx.homology);
  if (out.torsion_order % 2 == 0) return out;

  // m (c2 - c1) = delta0 g + k_alpha + k_beta
  const BigInt m = out.torsion_order;
  const auto& s = d.surface();
  const IntMatrix delta0 = s.coboundary0();
  const IntMatrix ka = cocycles_vanishing_on(d, EdgeKind::alpha);
  const IntMatrix kb = cocycles_vanishing_on(d, EdgeKind::beta);
  const std::size_t nv = delta0.cols();
  IntMatrix system(diff.size(), nv + ka.cols() + kb.cols());
  for (std::size_t e = 0; e < diff.size(); ++e) {
    for (std::size_t j = 0; j < nv; ++j) system(e, j) = delta0(e, j);
    for (std::size_t j = 0; j < ka.cols(); ++j) system(e, nv + j) = ka(e, j);
    for (std::size_t j = 0; j < kb.cols(); ++j) system(e, nv + ka.cols() + j) = kb(e, j);
  }
  IntVector rhs(diff.size());
  for (std::size_t e = 0; e < diff.size(); ++e) rhs[e] = m * diff[e];
  const auto sol = solve_integer(smith_normal_form(system), rhs);
  if (!sol) throw HomologyError("no 2-chain realises the homology between the cycles");

  HomotopyWitness w;
  w.m = m;
  w.vertex_values.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(nv));
  std::vector<BigInt> nx(n);
  for (std::size_t g = 0; g < n; ++g)
    for (int p : cx.generators.generators[g]) nx[g] += w.vertex_values[static_cast<std::size_t>(p)];

  const auto w1 = d.cochain_small(omega1), w2 = d.cochain_small(omega2);
  w.disk_relation_holds = true;
  for (const auto& disk : cx.disks) {
    const BigInt lhs = nx[static_cast<std::size_t>(disk.from)] - nx[static_cast<std::size_t>(disk.to)];
    if (lhs != m * (disk_weight(w1, disk) - disk_weight(w2, disk))) w.disk_relation_holds = false;
  }

  // Add copies of the surface (a constant on vertices, shifting every n_x by
  // the number of alpha curves) to make each class base divisible by m; fall
  // back to a per-class constant when no single shift works.
  const BigInt dcount = static_cast<long>(d.alphas().size());
  auto mod = [&](BigInt a) {
    a %= m;
    if (a < 0) a += m;
    return a;
  };
  std::optional<BigInt> shift;
  for (BigInt k = 0; k < m && !shift; ++k) {
    bool ok = true;
    for (const auto& members : cx.spinc.members)
      if (!members.empty() && mod(nx[static_cast<std::size_t>(members.front())] + dcount * k) != 0) ok = false;
    if (ok) shift = k;
  }
  for (const auto& members : cx.spinc.members) {
    if (members.empty()) continue;
    const BigInt offset = shift ? BigInt(-dcount * *shift) : mod(nx[static_cast<std::size_t>(members.front())]);
    for (int g : members) nx[static_cast<std::size_t>(g)] -= offset;
  }
  w.n_x = nx;
  w.h.assign(n, false);
  for (std::size_t g = 0; g < n; ++g) {
    if (mod(nx[g]) != 0) throw HomologyError("n_x(B) is not divisible by m");
    w.h[g] = (nx[g] / m) % 2 != 0;
  }
  const SparseGf2Map hmap = SparseGf2Map::diagonal(w.h);
  w.identity_holds = a1 + a2 == cx.differential * hmap + hmap * cx.differential;
  out.witness = std::move(w);
  return out;
}

}  // namespace floersut
