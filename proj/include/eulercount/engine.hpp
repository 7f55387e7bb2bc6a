#pragma once

#include <atomic>
#include <cstdint>
#include <limits>

#include "eulercount/errors.hpp"

namespace eulercount {

inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

/// Knobs shared by the enumeration engines. Results never depend on
/// `threads`; the search space is always split the same way and only the
/// number of workers draining it changes.
struct EngineOptions {
  unsigned threads = 1;
  /// Maximum number of search nodes before BudgetExceeded is thrown.
  std::uint64_t node_budget = kUnlimitedBudget;
};

/// Thread-safe search node counter.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t nodes = 1) {
    if (limit_ == kUnlimitedBudget) return;
    if (used_.fetch_add(nodes, std::memory_order_relaxed) + nodes > limit_)
      throw BudgetExceeded("enumeration budget of " + std::to_string(limit_) +
                           " nodes exceeded");
  }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

}  // namespace eulercount
