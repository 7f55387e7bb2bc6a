#include <algorithm>

#include "eulercount/counting.hpp"
#include "eulercount/errors.hpp"

namespace eulercount {

namespace {

std::vector<VertexId> arc_support(const DirectedMultigraph& d) {
  std::vector<bool> used(d.domain().bound(), false);
  for (const auto& a : d.arcs()) used[a.tail] = used[a.head] = true;
  std::vector<VertexId> out;
  for (VertexId v : d.domain().ids())
    if (used[v]) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

Count factorial(std::uint32_t k) {
  Count f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

void check_root(const DirectedMultigraph& d, VertexId root) {
  if (!d.contains(root)) throw InputError("root " + std::to_string(root) + " out of range");
}

}  // namespace

Count count_arborescences(const DirectedMultigraph& d, VertexId root) {
  check_root(d, root);
  if (d.arc_count() == 0) return 1;
  auto keep = arc_support(d);
  if (!std::binary_search(keep.begin(), keep.end(), root)) return 0;
  return det_exact(out_laplacian_minor_over(d, {}, root, keep));
}

void enumerate_arborescences(const DirectedMultigraph& d, VertexId root,
                             const std::function<void(std::span<const EdgeId>)>& visit,
                             NodeBudget* budget) {
  check_root(d, root);
  auto keep = arc_support(d);
  if (d.arc_count() > 0 && !std::binary_search(keep.begin(), keep.end(), root)) return;

  std::vector<VertexId> movers;
  for (VertexId v : keep)
    if (v != root) movers.push_back(v);
  std::vector<std::vector<EdgeId>> out(d.domain().bound());
  for (EdgeId a = 0; a < d.arc_count(); ++a) out[d.arc(a).tail].push_back(a);

  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> chosen(d.domain().bound(), kNone);
  std::vector<EdgeId> tree;

  // A choice of one outgoing arc per mover is an arborescence iff following
  // the choices from every mover reaches the root.
  auto reaches_root = [&] {
    for (VertexId start : movers) {
      VertexId v = start;
      for (std::size_t steps = 0; v != root; ++steps) {
        if (steps > movers.size()) return false;
        v = d.arc(chosen[v]).head;
      }
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (budget) budget->charge();
    if (i == movers.size()) {
      if (!reaches_root()) return;
      tree.clear();
      for (VertexId v : movers) tree.push_back(chosen[v]);
      std::sort(tree.begin(), tree.end());
      visit(tree);
      return;
    }
    for (EdgeId a : out[movers[i]]) {
      chosen[movers[i]] = a;
      self(self, i + 1);
    }
    chosen[movers[i]] = kNone;
  };
  recurse(recurse, 0);
}

Count count_circuits_directed_best(const DirectedMultigraph& d) {
  if (!is_eulerian(d)) return 0;
  auto keep = arc_support(d);
  Count total = count_arborescences(d, keep.front());
  auto outdeg = d.out_degrees();
  for (VertexId v : keep) total *= factorial(outdeg[v] - 1);
  return total;
}

Count brute_force_directed_circuits(const DirectedMultigraph& d, const EngineOptions& options) {
  if (!is_eulerian(d)) return 0;
  NodeBudget budget(options.node_budget);
  const VertexId start = arc_support(d).front();
  std::vector<std::vector<EdgeId>> out(d.domain().bound());
  for (EdgeId a = 0; a < d.arc_count(); ++a) out[d.arc(a).tail].push_back(a);
  std::vector<bool> used(d.arc_count(), false);

  Count trails = 0;
  auto walk = [&](auto&& self, VertexId v, std::size_t depth) -> void {
    budget.charge();
    if (depth == d.arc_count()) {
      if (v == start) ++trails;
      return;
    }
    for (EdgeId a : out[v]) {
      if (used[a]) continue;
      used[a] = true;
      self(self, d.arc(a).head, depth + 1);
      used[a] = false;
    }
  };
  walk(walk, start, 0);

  const Count visits(static_cast<unsigned long>(out[start].size()));
  if (trails % visits != 0)
    throw NonExactDivision("directed trail count not divisible by out-degree of the start");
  return trails / visits;
}

}  // namespace eulercount
