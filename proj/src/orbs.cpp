#include <algorithm>
#include <numeric>

#include "detail/bundles.hpp"
#include "detail/split_search.hpp"
#include "eulercount/counting.hpp"
#include "eulercount/errors.hpp"

namespace eulercount {

namespace {

void check_root(const Multigraph& g, VertexId root) {
  if (!g.contains(root)) throw InputError("root " + std::to_string(root) + " out of range");
}

Count sum(const std::vector<Count>& parts) {
  return std::accumulate(parts.begin(), parts.end(), Count(0));
}

}  // namespace

bool is_valid_orb(const Multigraph& g, const Orb& orb) {
  if (orb.orientation.size() != g.edge_count() || !g.contains(orb.root)) return false;
  const auto d = apply_orientation(g, orb.orientation);
  if (d.out_degrees() != d.in_degrees()) return false;

  const auto deg = g.degrees();
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> exit(g.domain().bound(), kNone);
  for (std::size_t i = 0; i < orb.tree_arcs.size(); ++i) {
    const EdgeId a = orb.tree_arcs[i];
    if (a >= g.edge_count()) return false;
    if (i > 0 && orb.tree_arcs[i - 1] >= a) return false;
    const VertexId tail = d.arc(a).tail;
    if (tail == orb.root || exit[tail] != kNone) return false;
    exit[tail] = a;
  }
  for (VertexId v : g.domain().ids()) {
    if (v == orb.root || deg[v] == 0) continue;
    if (exit[v] == kNone) return false;
    VertexId w = v;
    for (std::size_t steps = 0; w != orb.root; ++steps) {
      if (steps > orb.tree_arcs.size() || exit[w] == kNone) return false;
      w = d.arc(exit[w]).head;
    }
  }
  // Root must lie in the support unless the graph has no edges at all.
  return g.edge_count() == 0 || deg[orb.root] > 0;
}

Count count_orbs(const Multigraph& g, VertexId root, const EngineOptions& options) {
  check_root(g, root);
  if (!is_eulerian(g)) return 0;
  auto items = detail::edge_items(g);
  auto parts = detail::for_each_split<Count>(
      items, g.domain().bound(), options, [&](std::span<const std::uint32_t> bits, Count& acc) {
        std::vector<bool> forward(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) forward[i] = bits[i] != 0;
        acc += count_arborescences(apply_orientation(g, Orientation(std::move(forward))), root);
      });
  return sum(parts);
}

Count count_orbs_bundled(const Multigraph& g, VertexId root, const EngineOptions& options) {
  check_root(g, root);
  if (!is_eulerian(g)) return 0;
  const auto keep = support(g);
  if (!std::binary_search(keep.begin(), keep.end(), root)) return 0;

  const auto bundles = detail::group_bundles(g);
  const auto items = detail::bundle_items(bundles);
  auto parts = detail::for_each_split<Count>(
      items, g.domain().bound(), options, [&](std::span<const std::uint32_t> ks, Count& acc) {
        std::vector<Arc> arcs;
        std::vector<std::uint64_t> weights;
        Count multiplicity = 1;
        for (std::size_t i = 0; i < ks.size(); ++i) {
          const auto& b = bundles[i];
          const std::uint32_t size = items[i].size;
          if (ks[i] > 0) {
            arcs.push_back({b.lo, b.hi});
            weights.push_back(ks[i]);
          }
          if (ks[i] < size) {
            arcs.push_back({b.hi, b.lo});
            weights.push_back(size - ks[i]);
          }
          Count c;
          mpz_bin_uiui(c.get_mpz_t(), size, ks[i]);
          multiplicity *= c;
        }
        const DirectedMultigraph d(g.vertex_count(), std::move(arcs), g.with_origin());
        acc += multiplicity * det_exact(out_laplacian_minor_over(d, weights, root, keep));
      });
  return sum(parts);
}

Count count_orbs(const Multigraph& g, VertexId root, OrbEngine engine,
                 const EngineOptions& options) {
  return engine == OrbEngine::bundled ? count_orbs_bundled(g, root, options)
                                      : count_orbs(g, root, options);
}

void for_each_orb(const Multigraph& g, VertexId root, const std::function<void(const Orb&)>& visit,
                  NodeBudget* budget) {
  check_root(g, root);
  if (!is_eulerian(g)) return;
  EulerianOrientationStream stream(g, budget);
  while (auto o = stream.next()) {
    const auto d = apply_orientation(g, *o);
    Orb orb{*o, {}, root};
    enumerate_arborescences(
        d, root,
        [&](std::span<const EdgeId> tree) {
          orb.tree_arcs.assign(tree.begin(), tree.end());
          visit(orb);
        },
        budget);
  }
}

Count exit_order_factor(const Multigraph& g) {
  const auto half = half_degrees(g);
  Count product = 1;
  for (VertexId v : g.domain().ids()) {
    if (half[v] == 0) continue;
    Count f;
    mpz_fac_ui(f.get_mpz_t(), half[v] - 1);
    product *= f;
  }
  return product;
}

Count count_circuits_undirected(const Multigraph& g, VertexId root, const EngineOptions& options,
                                OrbEngine engine) {
  check_root(g, root);
  if (!is_eulerian(g)) return 0;
  return count_orbs(g, root, engine, options) * exit_order_factor(g);
}

}  // namespace eulercount
