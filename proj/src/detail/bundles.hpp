#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "detail/split_search.hpp"
#include "eulercount/multigraph.hpp"

namespace eulercount::detail {

// Parallel edges between lo < hi, in order of first appearance.
struct Bundle {
  VertexId lo;
  VertexId hi;
  std::vector<EdgeId> edges;
};

inline std::vector<Bundle> group_bundles(const Multigraph& g) {
  std::vector<Bundle> bundles;
  std::map<std::pair<VertexId, VertexId>, std::size_t> index;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [lo, hi] = std::minmax(g.edge(e).a, g.edge(e).b);
    auto [it, fresh] = index.try_emplace({lo, hi}, bundles.size());
    if (fresh) bundles.push_back({lo, hi, {}});
    bundles[it->second].edges.push_back(e);
  }
  return bundles;
}

inline std::vector<std::uint32_t> all_splits(std::uint32_t size) {
  std::vector<std::uint32_t> ks(size + 1);
  for (std::uint32_t k = 0; k <= size; ++k) ks[k] = k;
  return ks;
}

// One item per bundle; k counts copies directed lo -> hi.
inline std::vector<SplitItem> bundle_items(const std::vector<Bundle>& bundles) {
  std::vector<SplitItem> items;
  items.reserve(bundles.size());
  for (const auto& b : bundles) {
    const auto size = static_cast<std::uint32_t>(b.edges.size());
    items.push_back({b.lo, b.hi, size, all_splits(size)});
  }
  return items;
}

// One item per edge; value 1 means a -> b. Tries 0 before 1.
inline std::vector<SplitItem> edge_items(const Multigraph& g) {
  std::vector<SplitItem> items;
  items.reserve(g.edge_count());
  for (const auto& e : g.edges()) items.push_back({e.a, e.b, 1, {0, 1}});
  return items;
}

}  // namespace eulercount::detail
