#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"

namespace eulercount::testing {

Multigraph digon() { return Multigraph(2, {{1, 2}, {1, 2}}); }
Multigraph triangle() { return Multigraph(3, {{1, 2}, {2, 3}, {1, 3}}); }
Multigraph c4() { return Multigraph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }
Multigraph bowtie() {
  return Multigraph(5, {{1, 2}, {2, 5}, {5, 1}, {3, 4}, {4, 5}, {5, 3}});
}
Multigraph k5() {
  std::vector<Edge> edges;
  for (VertexId u = 1; u <= 5; ++u)
    for (VertexId v = u + 1; v <= 5; ++v) edges.push_back({u, v});
  return Multigraph(5, std::move(edges));
}
Multigraph path2() { return Multigraph(2, {{1, 2}}); }
Multigraph two_triangles() {
  return Multigraph(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
}
Multigraph flower3() {
  return Multigraph(4, {{1, 2}, {1, 2}, {1, 3}, {1, 3}, {1, 4}, {1, 4}});
}

std::vector<NamedGraph> curated_fixtures() {
  return {{"digon", digon()}, {"triangle", triangle()}, {"C4", c4()}, {"bowtie", bowtie()},
          {"K5", k5()}};
}

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

EdgeList relabel(const EdgeList& edges, const std::vector<VertexId>& perm) {
  EdgeList out;
  out.reserve(edges.size());
  for (auto [a, b] : edges) {
    VertexId x = perm[a], y = perm[b];
    out.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Least relabelled edge list over all permutations that respect a
// degree-based vertex refinement. Vertices are 0-based.
EdgeList canonical_form(std::size_t n, const EdgeList& edges) {
  std::vector<std::uint32_t> deg(n, 0);
  for (auto [a, b] : edges) ++deg[a], ++deg[b];
  std::vector<std::vector<std::uint32_t>> signature(n);
  for (std::size_t v = 0; v < n; ++v) signature[v].push_back(deg[v]);
  for (auto [a, b] : edges) {
    signature[a].push_back(100 + deg[b]);
    signature[b].push_back(100 + deg[a]);
  }
  for (auto& s : signature) std::sort(s.begin() + 1, s.end());

  std::vector<VertexId> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<VertexId>(v);
  std::sort(order.begin(), order.end(),
            [&](VertexId x, VertexId y) { return signature[x] < signature[y]; });
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && signature[order[j]] == signature[order[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }

  EdgeList best;
  std::vector<VertexId> perm(n);
  auto recurse = [&](auto&& self, std::size_t g) -> void {
    if (g == groups.size()) {
      for (std::size_t pos = 0; pos < n; ++pos) perm[order[pos]] = static_cast<VertexId>(pos);
      auto candidate = relabel(edges, perm);
      if (best.empty() || candidate < best) best = std::move(candidate);
      return;
    }
    auto [lo, hi] = groups[g];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      self(self, g + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace

std::vector<Multigraph> eulerian_multigraph_corpus(std::size_t max_edges) {
  std::set<std::pair<std::size_t, EdgeList>> seen;
  std::vector<Multigraph> out;
  for (std::size_t m = 2; m <= max_edges; ++m) {
    std::vector<VertexId> walk(m, 0);
    auto extend = [&](auto&& self, std::size_t i, VertexId used) -> void {
      if (i == m) {
        if (walk[m - 1] == walk[0]) return;
        EdgeList edges;
        for (std::size_t k = 0; k < m; ++k) edges.emplace_back(walk[k], walk[(k + 1) % m]);
        auto key = std::make_pair(static_cast<std::size_t>(used), canonical_form(used, edges));
        if (!seen.insert(key).second) return;
        std::vector<Edge> graph_edges;
        for (auto [a, b] : key.second) graph_edges.push_back({a + 1, b + 1});
        out.emplace_back(used, std::move(graph_edges));
        return;
      }
      for (VertexId v = 0; v <= used && v < m; ++v) {
        if (v == walk[i - 1]) continue;
        walk[i] = v;
        self(self, i + 1, std::max<VertexId>(used, v + 1));
      }
    };
    extend(extend, 1, 1);
  }
  return out;
}

std::vector<DirectedMultigraph> eulerian_digraph_corpus(std::size_t max_arcs) {
  std::vector<DirectedMultigraph> out;
  for (const auto& g : eulerian_multigraph_corpus(max_arcs))
    for (const auto& o : brute_force_orientations(g)) out.push_back(apply_orientation(g, o));
  return out;
}

}  // namespace eulercount::testing
