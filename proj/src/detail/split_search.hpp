#pragma once

#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

#include "detail/parallel.hpp"
#include "eulercount/engine.hpp"
#include "eulercount/multigraph.hpp"

namespace eulercount::detail {

// A group of `size` parallel edges between a and b; the assigned value k is
// the number of them directed a -> b. A plain edge is an item of size 1.
struct SplitItem {
  VertexId a;
  VertexId b;
  std::uint32_t size;
  std::vector<std::uint32_t> choices;  // candidate values of k, in search order
};

// Backtracking over items in order with per-vertex balance pruning: a branch
// is cut as soon as some endpoint's imbalance exceeds the capacity of its
// unassigned incident items. Yields every feasible assignment of the items
// [0, stop_depth), starting from a fixed prefix.
class SplitSearch {
 public:
  SplitSearch(std::span<const SplitItem> items, std::size_t vertex_bound,
              std::span<const std::uint32_t> prefix, std::size_t stop_depth, NodeBudget* budget)
      : items_(items),
        stop_(stop_depth),
        prefix_len_(prefix.size()),
        budget_(budget),
        balance_(vertex_bound, 0),
        remaining_(vertex_bound, 0),
        value_(items.size(), 0),
        choice_(items.size() + 1, -1),
        depth_(prefix.size()) {
    for (const auto& it : items_) {
      remaining_[it.a] += it.size;
      remaining_[it.b] += it.size;
    }
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      value_[i] = prefix[i];
      apply(i, +1);
    }
  }

  bool next() {
    if (done_) return false;
    if (yielded_) {
      yielded_ = false;
      if (stop_ == prefix_len_) {
        done_ = true;
        return false;
      }
      depth_ = stop_ - 1;
    }
    for (;;) {
      if (depth_ == stop_) {
        yielded_ = true;
        return true;
      }
      const auto& item = items_[depth_];
      if (choice_[depth_] >= 0) apply(depth_, -1);
      bool descended = false;
      while (static_cast<std::size_t>(++choice_[depth_]) < item.choices.size()) {
        value_[depth_] = item.choices[choice_[depth_]];
        apply(depth_, +1);
        if (feasible(item)) {
          if (budget_) budget_->charge();
          ++depth_;
          choice_[depth_] = -1;
          descended = true;
          break;
        }
        apply(depth_, -1);
      }
      if (descended) continue;
      choice_[depth_] = -1;
      if (depth_ == prefix_len_) {
        done_ = true;
        return false;
      }
      --depth_;
    }
  }

  std::span<const std::uint32_t> values() const { return {value_.data(), stop_}; }

 private:
  void apply(std::size_t i, int sign) {
    const auto& it = items_[i];
    const std::int64_t delta = 2 * static_cast<std::int64_t>(value_[i]) - it.size;
    balance_[it.a] += sign * delta;
    balance_[it.b] -= sign * delta;
    remaining_[it.a] -= sign * static_cast<std::int64_t>(it.size);
    remaining_[it.b] -= sign * static_cast<std::int64_t>(it.size);
  }

  bool feasible(const SplitItem& it) const {
    return std::llabs(balance_[it.a]) <= remaining_[it.a] &&
           std::llabs(balance_[it.b]) <= remaining_[it.b];
  }

  std::span<const SplitItem> items_;
  std::size_t stop_;
  std::size_t prefix_len_;
  NodeBudget* budget_;
  std::vector<std::int64_t> balance_;
  std::vector<std::int64_t> remaining_;
  std::vector<std::uint32_t> value_;
  std::vector<int> choice_;
  std::size_t depth_;
  bool yielded_ = false;
  bool done_ = false;
};

// Number of leading items whose assignments are enumerated up front and
// handed out as independent tasks. Depends only on the items.
inline std::size_t frontier_depth(std::span<const SplitItem> items) {
  std::size_t depth = 0;
  std::uint64_t width = 1;
  while (depth < items.size() && width < 256) width *= items[depth++].choices.size();
  return depth;
}

// Runs visit(values, acc) on every complete feasible assignment, with the
// search split into frontier tasks. Returns one accumulator per task, in
// task order.
template <class Acc, class Visit>
std::vector<Acc> for_each_split(std::span<const SplitItem> items, std::size_t vertex_bound,
                                const EngineOptions& options, Visit&& visit) {
  NodeBudget budget(options.node_budget);
  const std::size_t depth = frontier_depth(items);
  std::vector<std::vector<std::uint32_t>> frontier;
  {
    SplitSearch search(items, vertex_bound, {}, depth, &budget);
    while (search.next()) {
      auto v = search.values();
      frontier.emplace_back(v.begin(), v.end());
    }
  }
  return run_tasks<Acc>(frontier, options.threads, [&](const std::vector<std::uint32_t>& prefix) {
    Acc acc{};
    SplitSearch search(items, vertex_bound, prefix, items.size(), &budget);
    while (search.next()) visit(search.values(), acc);
    return acc;
  });
}

}  // namespace eulercount::detail
