#include <algorithm>
#include <numeric>

#include "detail/parallel.hpp"
#include "eulercount/errors.hpp"
#include "eulercount/reduction.hpp"

namespace eulercount {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p))
    throw InputError("p = " + std::to_string(p) + " is not an odd prime");
}

mpz_class big(std::uint64_t x) { return mpz_class(static_cast<unsigned long>(x)); }

}  // namespace

std::vector<std::string> GpGadget::comment_lines() const {
  std::vector<std::string> lines;
  lines.reserve(origin.size());
  for (std::size_t e = 0; e < origin.size(); ++e) {
    const auto& o = origin[e];
    lines.push_back(std::string(o.kind == GadgetEdgeOrigin::Kind::bundle ? "bundle " : "attach ") +
                    std::to_string(e) + ' ' + std::to_string(o.source) + ' ' +
                    std::to_string(o.index));
  }
  return lines;
}

GpGadget build_gp(const Multigraph& g, std::uint64_t p) {
  require_odd_prime(p);
  if (g.vertex_count() == 0) throw InputError("base graph has no vertices");
  if (g.with_origin()) throw InputError("base graph already uses vertex 0");

  std::vector<Edge> edges;
  std::vector<GadgetEdgeOrigin> origin;
  edges.reserve(p * g.edge_count() + 2 * g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (std::uint32_t copy = 0; copy < p; ++copy) {
      edges.push_back(g.edge(e));
      origin.push_back({GadgetEdgeOrigin::Kind::bundle, e, copy});
    }
  }
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    for (std::uint32_t i = 0; i < 2; ++i) {
      edges.push_back({v, 0});
      origin.push_back({GadgetEdgeOrigin::Kind::attach, v, i});
    }
  }
  return GpGadget{g, p, Multigraph(g.vertex_count(), std::move(edges), true), std::move(origin)};
}

bool is_special(const OrbType& type, std::uint64_t p) {
  return std::all_of(type.per_edge.begin(), type.per_edge.end(), [p](const BundleState& s) {
    return !s.has_tree_edge && (s.k == 0 || s.k == p);
  });
}

OrbType orb_type(const GpGadget& gadget, const Orb& orb) {
  if (orb.root != 0 || !is_valid_orb(gadget.graph, orb))
    throw InvalidOrb("not an orb of the gadget rooted at 0");
  std::vector<bool> in_tree(gadget.graph.edge_count(), false);
  for (EdgeId a : orb.tree_arcs) in_tree[a] = true;

  OrbType type{std::vector<BundleState>(gadget.base.edge_count(), BundleState{0, false})};
  for (EdgeId e = 0; e < gadget.graph.edge_count(); ++e) {
    const auto& o = gadget.origin[e];
    if (o.kind != GadgetEdgeOrigin::Kind::bundle) continue;
    const auto& edge = gadget.graph.edge(e);
    auto& state = type.per_edge[o.source];
    if (orb.orientation.tail(edge, e) == std::min(edge.a, edge.b)) ++state.k;
    state.has_tree_edge = state.has_tree_edge || in_tree[e];
  }
  return type;
}

TypeCensus type_census(const Multigraph& g, std::uint64_t p, const EngineOptions& options) {
  const GpGadget gadget = build_gp(g, p);
  TypeCensus census;
  if (!is_eulerian(gadget.graph)) return census;

  NodeBudget budget(options.node_budget);
  std::vector<Orientation> orientations;
  {
    EulerianOrientationStream stream(gadget.graph, &budget);
    while (auto o = stream.next()) orientations.push_back(std::move(*o));
  }

  // Fixed chunking keeps the merge order independent of the worker count.
  constexpr std::size_t kChunk = 64;
  std::vector<std::pair<std::size_t, std::size_t>> chunks;
  for (std::size_t i = 0; i < orientations.size(); i += kChunk)
    chunks.emplace_back(i, std::min(i + kChunk, orientations.size()));

  auto parts = detail::run_tasks<TypeCensus>(
      chunks, options.threads, [&](const std::pair<std::size_t, std::size_t>& range) {
        TypeCensus local;
        for (std::size_t i = range.first; i < range.second; ++i) {
          Orb orb{orientations[i], {}, 0};
          const auto d = apply_orientation(gadget.graph, orientations[i]);
          enumerate_arborescences(
              d, 0,
              [&](std::span<const EdgeId> tree) {
                orb.tree_arcs.assign(tree.begin(), tree.end());
                local[orb_type(gadget, orb)] += 1;
              },
              &budget);
        }
        return local;
      });
  for (const auto& part : parts)
    for (const auto& [type, count] : part) census[type] += count;
  return census;
}

CensusSummary summarize_census(const TypeCensus& census, std::uint64_t p) {
  CensusSummary s{0, 0, census.size(), 0};
  for (const auto& [type, count] : census) {
    s.total += count;
    if (is_special(type, p)) s.special_total += count;
    else if (reduce_mod(count, p) != 0) ++s.nonspecial_not_divisible;
  }
  return s;
}

std::vector<std::uint64_t> select_primes(std::size_t m, PrimePolicy policy) {
  const mpz_class bound = mpz_class(1) << m;
  std::vector<std::uint64_t> primes;
  mpz_class product = 1;
  if (policy == PrimePolicy::between_m_and_2m) {
    for (std::uint64_t q : primes_strictly_between(static_cast<std::int64_t>(m) - 1,
                                                   2 * static_cast<std::int64_t>(m) + 1)) {
      if (q == 2) continue;
      primes.push_back(q);
      product *= big(q);
    }
  }
  std::uint64_t q = primes.empty() ? 2 : primes.back();
  while (product <= bound) {
    q = next_odd_prime(q);
    primes.push_back(q);
    product *= big(q);
  }
  return primes;
}

RecoveryReport recover_orientation_count(const Multigraph& g, const OrbOracle& oracle,
                                         const RecoveryOptions& options) {
  RecoveryReport report{0, {}, {}, 0};
  if (g.edge_count() == 0 || !all_degrees_even(g)) return report;

  std::vector<std::uint64_t> primes = select_primes(g.edge_count(), options.policy);
  if (options.held_out_check) {
    report.check_prime = next_odd_prime(primes.back());
    primes.push_back(report.check_prime);
  }

  auto values = detail::run_tasks<Count>(primes, options.threads, [&](std::uint64_t p) {
    const GpGadget gadget = build_gp(g, p);
    try {
      return oracle(gadget.graph, 0);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw OracleFailure("oracle failed at p = " + std::to_string(p) + ": " + e.what());
    }
  });

  auto residue_at = [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    mpz_class two_n;
    mpz_powm_ui(two_n.get_mpz_t(), mpz_class(2).get_mpz_t(), g.vertex_count(),
                big(p).get_mpz_t());
    const std::uint64_t scaled = reduce_mod(values[i], p);
    const auto inv = static_cast<unsigned __int128>(mod_inverse(two_n, p));
    return Residue{p, static_cast<std::uint64_t>(scaled * inv % p)};
  };

  const std::size_t used = options.held_out_check ? primes.size() - 1 : primes.size();
  for (std::size_t i = 0; i < used; ++i) {
    report.residues.push_back(residue_at(i));
    report.oracle_values.push_back(values[i]);
  }
  report.n_orientations = crt_reconstruct(report.residues);

  if (report.n_orientations > (mpz_class(1) << g.edge_count()))
    throw OracleFailure("reconstructed count " + report.n_orientations.get_str() +
                        " exceeds 2^m; the oracle residues are inconsistent");
  if (options.held_out_check) {
    const Residue check = residue_at(used);
    if (reduce_mod(report.n_orientations, check.modulus) != check.residue)
      throw OracleFailure("held-out prime " + std::to_string(check.modulus) +
                          " disagrees with the reconstructed count");
  }
  return report;
}

}  // namespace eulercount
