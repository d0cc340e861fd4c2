#include "floersut/decomposition.hpp"

#include <algorithm>
#include <tuple>

namespace floersut {

namespace {

using DiskKey = std::tuple<int, int, std::vector<int>, long long>;

}  // namespace

Theorem1Report check_theorem1(const SurfaceDiagramP& sd, const DualCycle& omega, int threads) {
  Theorem1Report r;
  const auto errors = check_surface_diagram(sd);
  r.surface_valid = errors.empty();
  if (!r.surface_valid) {
    r.failures = errors;
    return r;
  }
  const SuturedDiagram& base = sd.base;
  const Decomposition dec = decompose(sd);
  const auto v = validate_diagram(dec.diagram);
  r.new_diagram_valid = v.ok();
  for (const auto& m : v.messages) r.failures.push_back("new diagram: " + m);

  const DualCycle pushed = push_off_b(sd, omega);
  const DualCycle lifted = lift_cycle(sd, dec, pushed);

  const SFHModule cx = chain_complex(base, threads);
  const SFHModule cx2 = chain_complex(dec.diagram, threads);
  const std::size_t n = cx.generators.size(), n2 = cx2.generators.size();
  r.base_generator_count = n;
  const auto outer = outer_generators(sd, cx.generators);
  r.outer_generator_count = outer.size();
  std::vector<char> is_outer(n, 0);
  for (int g : outer) is_outer[static_cast<std::size_t>(g)] = 1;

  // p on generators.
  std::vector<int> image(n2, -1);
  std::vector<int> preimage(n, -1);
  r.bijection = n2 == outer.size();
  for (std::size_t g = 0; g < n2; ++g) {
    Generator x;
    for (int p : cx2.generators.generators[g]) x.push_back(dec.vertex_map[static_cast<std::size_t>(p)]);
    const int idx = cx.generators.find(x);
    if (idx < 0 || !is_outer[static_cast<std::size_t>(idx)] || preimage[static_cast<std::size_t>(idx)] >= 0) {
      r.bijection = false;
      continue;
    }
    image[g] = idx;
    preimage[static_cast<std::size_t>(idx)] = static_cast<int>(g);
  }
  if (!r.bijection) {
    r.failures.push_back("outer generators do not correspond to generators of the new diagram");
    return r;
  }

  const SparseGf2Map a = action_matrix(base, n, cx.disks, pushed);
  const SparseGf2Map a2 = action_matrix(dec.diagram, n2, cx2.disks, lifted);
  r.splitting = true;
  for (const auto* m : {&cx.differential, &a})
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row : m->column(col))
        if (is_outer[row] != is_outer[col]) {
          r.splitting = false;
          r.failures.push_back("map mixes O_P and its complement at generators " + std::to_string(col) + " -> " +
                               std::to_string(row));
        }

  const auto w = base.cochain_small(pushed);
  const auto w2 = dec.diagram.cochain_small(lifted);
  std::vector<DiskKey> old_disks, new_disks;
  for (const auto& disk : cx.disks)
    if (is_outer[static_cast<std::size_t>(disk.from)])
      old_disks.emplace_back(disk.from, disk.to, disk.faces, disk_weight(w, disk));
  for (const auto& disk : cx2.disks) {
    std::vector<int> faces;
    for (int f : disk.faces) faces.push_back(dec.face_map[static_cast<std::size_t>(f)].first);
    std::sort(faces.begin(), faces.end());
    new_disks.emplace_back(image[static_cast<std::size_t>(disk.from)], image[static_cast<std::size_t>(disk.to)], faces,
                           disk_weight(w2, disk));
  }
  std::sort(old_disks.begin(), old_disks.end());
  std::sort(new_disks.begin(), new_disks.end());
  auto strip = [](std::vector<DiskKey> ks) {
    for (auto& k : ks) std::get<3>(k) = 0;
    return ks;
  };
  r.disks_match = strip(old_disks) == strip(new_disks);
  r.weights_match = r.disks_match && old_disks == new_disks;
  r.matched_disks = r.disks_match ? old_disks.size() : 0;
  if (!r.disks_match) r.failures.push_back("disks between outer generators do not correspond");
  if (r.disks_match && !r.weights_match) r.failures.push_back("disk weights differ after lifting");

  SparseGf2Map iota(n, n2), pi(n2, n);
  for (std::size_t g = 0; g < n2; ++g) {
    iota.toggle(static_cast<std::size_t>(image[g]), g);
    pi.toggle(g, static_cast<std::size_t>(image[g]));
  }
  try {
    const SparseGf2Map hi = induced_map(iota, cx2.homology, cx.homology);
    const SparseGf2Map hp = induced_map(pi, cx.homology, cx2.homology);
    const SparseGf2Map ha = induced_map(a, cx.homology, cx.homology);
    const SparseGf2Map ha2 = induced_map(a2, cx2.homology, cx2.homology);
    r.inclusion_commutes = hi * ha2 == ha * hi;
    r.projection_commutes = ha2 * hp == hp * ha;
    r.projection_inclusion_identity = hp * hi == SparseGf2Map::identity(cx2.homology.total_rank());
  } catch (const HomologyError& e) {
    r.failures.push_back(e.what());
  }
  if (!r.inclusion_commutes) r.failures.push_back("inclusion does not intertwine the actions");
  if (!r.projection_commutes) r.failures.push_back("projection does not intertwine the actions");
  if (!r.projection_inclusion_identity) r.failures.push_back("projection after inclusion is not the identity");
  return r;
}

}  // namespace floersut
