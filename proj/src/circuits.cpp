#include <algorithm>
#include <set>

#include "eulercount/counting.hpp"
#include "eulercount/errors.hpp"

namespace eulercount {

namespace {

VertexId tail_of(const Multigraph& g, const Traversal& t) {
  return t.forward ? g.edge(t.edge).a : g.edge(t.edge).b;
}

VertexId head_of(const Multigraph& g, const Traversal& t) {
  return t.forward ? g.edge(t.edge).b : g.edge(t.edge).a;
}

// Traversals leaving each vertex, in edge id order.
std::vector<std::vector<Traversal>> departures(const Multigraph& g) {
  std::vector<std::vector<Traversal>> out(g.domain().bound());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out[g.edge(e).a].push_back({e, true});
    out[g.edge(e).b].push_back({e, false});
  }
  return out;
}

// Calls visit(trail) for every closed trail from the least support vertex
// that uses each edge exactly once. Returns that vertex.
template <class Visit>
VertexId for_each_closed_trail(const Multigraph& g, NodeBudget& budget, Visit&& visit) {
  const VertexId start = support(g).front();
  const auto leaving = departures(g);
  std::vector<bool> used(g.edge_count(), false);
  std::vector<Traversal> trail;
  trail.reserve(g.edge_count());

  auto walk = [&](auto&& self, VertexId v) -> void {
    budget.charge();
    if (trail.size() == g.edge_count()) {
      if (v == start) visit(trail);
      return;
    }
    for (const Traversal& t : leaving[v]) {
      if (used[t.edge]) continue;
      used[t.edge] = true;
      trail.push_back(t);
      self(self, head_of(g, t));
      trail.pop_back();
      used[t.edge] = false;
    }
  };
  walk(walk, start);
  return start;
}

std::vector<Traversal> rotated_from(const Multigraph& g, const CircuitSequence& c,
                                    VertexId root) {
  const auto canon = c.canonical();
  const auto steps = canon.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (tail_of(g, steps[i]) != root) continue;
    std::vector<Traversal> out(steps.begin() + i, steps.end());
    out.insert(out.end(), steps.begin(), steps.begin() + i);
    return out;
  }
  throw InvalidCircuit("circuit does not pass through root " + std::to_string(root));
}

}  // namespace

CircuitSequence CircuitSequence::canonical() const {
  const std::size_t n = steps_.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& x = steps_[(r + i) % n];
      const auto& y = steps_[(best + i) % n];
      if (x == y) continue;
      if (x < y) best = r;
      break;
    }
  }
  std::vector<Traversal> out(steps_.begin() + best, steps_.end());
  out.insert(out.end(), steps_.begin(), steps_.begin() + best);
  return CircuitSequence(std::move(out));
}

bool is_valid_circuit(const Multigraph& g, const CircuitSequence& c) {
  const auto steps = c.steps();
  if (steps.empty() || steps.size() != g.edge_count()) return false;
  std::vector<bool> seen(g.edge_count(), false);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& t = steps[i];
    if (t.edge >= g.edge_count() || seen[t.edge]) return false;
    seen[t.edge] = true;
    if (head_of(g, t) != tail_of(g, steps[(i + 1) % steps.size()])) return false;
  }
  return true;
}

Count brute_force_circuits(const Multigraph& g, const EngineOptions& options) {
  if (!is_eulerian(g)) return 0;
  NodeBudget budget(options.node_budget);
  Count trails = 0;
  const VertexId start =
      for_each_closed_trail(g, budget, [&](const std::vector<Traversal>&) { ++trails; });
  const Count visits(static_cast<unsigned long>(g.degrees()[start] / 2));
  if (trails % visits != 0)
    throw NonExactDivision("closed trail count not divisible by d_r");
  return trails / visits;
}

std::vector<CircuitSequence> enumerate_circuits(const Multigraph& g,
                                                const EngineOptions& options) {
  if (!is_eulerian(g)) return {};
  NodeBudget budget(options.node_budget);
  std::set<CircuitSequence> circuits;
  for_each_closed_trail(g, budget, [&](const std::vector<Traversal>& trail) {
    circuits.insert(CircuitSequence(trail).canonical());
  });
  return {circuits.begin(), circuits.end()};
}

CircuitSequence circuit_from_orb(const Multigraph& g, const Orb& orb,
                                 const ExitOrderings& exit_orderings) {
  if (!is_valid_orb(g, orb)) throw InvalidOrb("orb invariants do not hold");
  if (exit_orderings.size() != g.domain().bound())
    throw InputError("expected one exit ordering per vertex id");

  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> tree_exit(g.domain().bound(), kNone);
  for (EdgeId a : orb.tree_arcs) tree_exit[orb.orientation.tail(g.edge(a), a)] = a;

  std::vector<std::vector<EdgeId>> expected(g.domain().bound());
  for (EdgeId a = 0; a < g.edge_count(); ++a) {
    const VertexId t = orb.orientation.tail(g.edge(a), a);
    if (a != tree_exit[t]) expected[t].push_back(a);
  }
  for (VertexId v : g.domain().ids()) {
    auto given = exit_orderings[v];
    std::sort(given.begin(), given.end());
    if (given != expected[v])
      throw InputError("exit ordering of vertex " + std::to_string(v) +
                       " is not a permutation of its non-tree outgoing arcs");
  }

  std::vector<std::size_t> next(g.domain().bound(), 0);
  std::vector<bool> tree_used(g.domain().bound(), false);
  std::vector<Traversal> steps;
  steps.reserve(g.edge_count());
  VertexId v = orb.root;
  for (;;) {
    EdgeId a;
    if (next[v] < exit_orderings[v].size()) {
      a = exit_orderings[v][next[v]++];
    } else if (v != orb.root && !tree_used[v]) {
      a = tree_exit[v];
      tree_used[v] = true;
    } else {
      break;
    }
    steps.push_back({a, orb.orientation.forward(a)});
    v = orb.orientation.head(g.edge(a), a);
  }
  if (steps.size() != g.edge_count())
    throw InternalError("walk from a valid orb stopped before using every edge");
  return CircuitSequence(std::move(steps));
}

void for_each_exit_ordering(const Multigraph& g, const Orb& orb,
                            const std::function<void(const ExitOrderings&)>& visit) {
  if (!is_valid_orb(g, orb)) throw InvalidOrb("orb invariants do not hold");
  ExitOrderings orderings(g.domain().bound());
  std::vector<bool> is_tree(g.edge_count(), false);
  for (EdgeId a : orb.tree_arcs) is_tree[a] = true;
  for (EdgeId a = 0; a < g.edge_count(); ++a)
    if (!is_tree[a]) orderings[orb.orientation.tail(g.edge(a), a)].push_back(a);

  const auto ids = g.domain().ids();
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == ids.size()) {
      visit(orderings);
      return;
    }
    auto& list = orderings[ids[i]];
    std::sort(list.begin(), list.end());
    do {
      self(self, i + 1);
    } while (std::next_permutation(list.begin(), list.end()));
  };
  recurse(recurse, 0);
}

Orb circuit_to_orb(const Multigraph& g, const CircuitSequence& c, VertexId root) {
  if (!g.contains(root)) throw InputError("root " + std::to_string(root) + " out of range");
  if (!is_valid_circuit(g, c)) throw InvalidCircuit("not an Eulerian circuit of the graph");
  const auto steps = rotated_from(g, c, root);

  std::vector<bool> forward(g.edge_count());
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> last_exit(g.domain().bound(), kNone);
  for (const auto& t : steps) {
    forward[t.edge] = t.forward;
    last_exit[tail_of(g, t)] = t.edge;
  }
  Orb orb{Orientation(std::move(forward)), {}, root};
  for (VertexId v : g.domain().ids())
    if (v != root && last_exit[v] != kNone) orb.tree_arcs.push_back(last_exit[v]);
  std::sort(orb.tree_arcs.begin(), orb.tree_arcs.end());
  return orb;
}

ExitOrderings exit_orderings_of(const Multigraph& g, const CircuitSequence& c, const Orb& orb) {
  if (!is_valid_circuit(g, c)) throw InvalidCircuit("not an Eulerian circuit of the graph");
  std::vector<bool> is_tree(g.edge_count(), false);
  for (EdgeId a : orb.tree_arcs) is_tree[a] = true;
  ExitOrderings orderings(g.domain().bound());
  for (const auto& t : rotated_from(g, c, orb.root))
    if (!is_tree[t.edge]) orderings[tail_of(g, t)].push_back(t.edge);
  return orderings;
}

}  // namespace eulercount
