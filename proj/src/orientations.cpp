#include <numeric>

#include "detail/bundles.hpp"
#include "detail/split_search.hpp"
#include "eulercount/counting.hpp"

namespace eulercount {

struct EulerianOrientationStream::State {
  std::vector<detail::SplitItem> items;
  detail::SplitSearch search;
  bool empty;

  State(const Multigraph& g, NodeBudget* budget)
      : items(detail::edge_items(g)),
        search(items, g.domain().bound(), {}, items.size(), budget),
        empty(g.edge_count() == 0) {}
};

EulerianOrientationStream::EulerianOrientationStream(const Multigraph& g, NodeBudget* budget)
    : state_(std::make_unique<State>(g, budget)) {}
EulerianOrientationStream::~EulerianOrientationStream() = default;
EulerianOrientationStream::EulerianOrientationStream(EulerianOrientationStream&&) noexcept =
    default;
EulerianOrientationStream& EulerianOrientationStream::operator=(
    EulerianOrientationStream&&) noexcept = default;

std::optional<Orientation> EulerianOrientationStream::next() {
  if (state_->empty || !state_->search.next()) return std::nullopt;
  auto values = state_->search.values();
  std::vector<bool> bits(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) bits[i] = values[i] != 0;
  return Orientation(std::move(bits));
}

std::vector<Orientation> enumerate_eulerian_orientations(const Multigraph& g) {
  std::vector<Orientation> out;
  EulerianOrientationStream stream(g);
  while (auto o = stream.next()) out.push_back(std::move(*o));
  return out;
}

namespace {

Count binomial(std::uint32_t n, std::uint32_t k) {
  Count c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

Count weighted_split_count(const Multigraph& g, std::vector<detail::SplitItem> items,
                           const EngineOptions& options) {
  auto parts = detail::for_each_split<Count>(
      items, g.domain().bound(), options, [&](std::span<const std::uint32_t> ks, Count& acc) {
        Count term = 1;
        for (std::size_t i = 0; i < ks.size(); ++i) term *= binomial(items[i].size, ks[i]);
        acc += term;
      });
  return std::accumulate(parts.begin(), parts.end(), Count(0));
}

}  // namespace

Count count_eulerian_orientations(const Multigraph& g, const EngineOptions& options,
                                  OrbEngine engine) {
  if (g.edge_count() == 0 || !all_degrees_even(g)) return 0;
  if (engine == OrbEngine::bundled)
    return weighted_split_count(g, detail::bundle_items(detail::group_bundles(g)), options);

  auto items = detail::edge_items(g);
  auto parts = detail::for_each_split<std::uint64_t>(
      items, g.domain().bound(), options,
      [](std::span<const std::uint32_t>, std::uint64_t& acc) { ++acc; });
  Count total = 0;
  for (auto p : parts) total += Count(static_cast<unsigned long>(p));
  return total;
}

Count count_orientations_with_unanimous_bundles(const Multigraph& g,
                                                const std::vector<bool>& unanimous,
                                                const EngineOptions& options) {
  if (unanimous.size() != g.edge_count())
    throw InputError("expected one unanimity flag per edge");
  if (g.edge_count() == 0 || !all_degrees_even(g)) return 0;
  auto bundles = detail::group_bundles(g);
  auto items = detail::bundle_items(bundles);
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    bool forced = false;
    for (EdgeId e : bundles[i].edges) forced = forced || unanimous[e];
    if (forced && items[i].size > 0) items[i].choices = {0, items[i].size};
  }
  return weighted_split_count(g, std::move(items), options);
}

}  // namespace eulercount
