#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eulercount/counting.hpp"
#include "eulercount/engine.hpp"
#include "eulercount/multigraph.hpp"
#include "eulercount/number_theory.hpp"

namespace eulercount {

// ---------------------------------------------------------------------------
// Orb counting to Eulerian orientation counting

/// Where a gadget edge came from: copy `index` of base edge `source`, or
/// attachment `index` (0 or 1) joining vertex `source` to vertex 0.
struct GadgetEdgeOrigin {
  enum class Kind { bundle, attach } kind;
  std::uint32_t source;
  std::uint32_t index;

  friend bool operator==(const GadgetEdgeOrigin&, const GadgetEdgeOrigin&) = default;
};

/// The base graph with every edge replaced by p parallel copies, plus a new
/// vertex 0 joined to each base vertex by two parallel edges. Edge order: all
/// bundles in base-edge order, then the attachments in vertex order.
struct GpGadget {
  Multigraph base;
  std::uint64_t p = 0;
  Multigraph graph;
  std::vector<GadgetEdgeOrigin> origin;  // per gadget edge id

  /// `c bundle ...` / `c attach ...` lines describing `origin`.
  std::vector<std::string> comment_lines() const;
};

/// Throws InputError unless p is an odd prime and g has at least one vertex.
GpGadget build_gp(const Multigraph& g, std::uint64_t p);

struct BundleState {
  std::uint32_t k;  // copies directed from the smaller to the larger endpoint
  bool has_tree_edge;

  friend auto operator<=>(const BundleState&, const BundleState&) = default;
  friend bool operator==(const BundleState&, const BundleState&) = default;
};

/// One BundleState per base edge.
struct OrbType {
  std::vector<BundleState> per_edge;

  friend auto operator<=>(const OrbType&, const OrbType&) = default;
  friend bool operator==(const OrbType&, const OrbType&) = default;
};

/// Every bundle unanimous and free of tree edges.
bool is_special(const OrbType& type, std::uint64_t p);

/// Type of an orb of gadget.graph rooted at 0. Throws InvalidOrb.
OrbType orb_type(const GpGadget& gadget, const Orb& orb);

using TypeCensus = std::map<OrbType, Count>;

/// Partitions all orbs of G_p (rooted at 0) by type, by exhaustive
/// enumeration. Throws BudgetExceeded when options.node_budget runs out.
TypeCensus type_census(const Multigraph& g, std::uint64_t p, const EngineOptions& options = {});

struct CensusSummary {
  Count total;
  Count special_total;
  std::size_t class_count = 0;
  std::size_t nonspecial_not_divisible = 0;  // classes whose size is not 0 mod p
};

CensusSummary summarize_census(const TypeCensus& census, std::uint64_t p);

enum class PrimePolicy {
  /// 3, 5, 7, ... until the product exceeds 2^m.
  small_primes,
  /// Every odd prime p with m <= p <= 2m, extended past 2m by consecutive
  /// primes when their product does not yet exceed 2^m.
  between_m_and_2m,
};

/// Counts orbs of a multigraph rooted at a given vertex.
using OrbOracle = std::function<Count(const Multigraph&, VertexId)>;

struct RecoveryReport {
  Count n_orientations;
  ResidueSystem residues;  // N mod p, in prime order
  std::vector<Count> oracle_values;
  /// Set when a held-out prime was checked against the result.
  std::uint64_t check_prime = 0;
};

struct RecoveryOptions {
  PrimePolicy policy = PrimePolicy::small_primes;
  /// Evaluate the oracle at one further prime and require agreement.
  bool held_out_check = false;
  unsigned threads = 1;
};

/// The primes the policy selects for a graph with m edges.
std::vector<std::uint64_t> select_primes(std::size_t m, PrimePolicy policy);

/// Recovers the number of Eulerian orientations of g from orb counts of the
/// G_p gadgets: N = oracle(G_p, 0) / 2^n (mod p), then CRT. Returns N = 0
/// without oracle calls when g has no edges or an odd degree; a disconnected
/// even graph is fine since G_p is connected through vertex 0. Throws OracleFailure when
/// the oracle throws or the held-out check disagrees.
RecoveryReport recover_orientation_count(const Multigraph& g, const OrbOracle& oracle,
                                         const RecoveryOptions& options = {});

// ---------------------------------------------------------------------------
// NAE-3SAT counting to Eulerian orientation counting

using Literal = std::int32_t;  // +v or -v, variables numbered from 1

struct CnfInstance {
  std::uint32_t variables = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

/// DIMACS CNF. Every clause must have three literals over distinct variables.
/// Throws ParseError or MalformedClause.
CnfInstance parse_dimacs(std::string_view text);

/// Throws MalformedClause on a clause that repeats a variable or mentions
/// one outside 1..variables.
void validate_cnf(const CnfInstance& cnf);

/// Brute force over all assignments: every clause needs a true and a false
/// literal.
Count count_nae_assignments(const CnfInstance& cnf);

enum class NaeEdgeRole { mate, clause_literal, clause_s, literal_s };

/// Literal vertices come first (x1, not-x1, x2, ...), then one vertex per
/// clause, then the spare vertex s. Edges: mate bundles per variable, then
/// per clause its three literal edges and its edge to s, then the remaining
/// literal-to-s edges per literal.
struct NaeGadget {
  CnfInstance cnf;
  std::uint64_t p = 0;
  Multigraph graph;
  std::vector<NaeEdgeRole> role;  // per edge id

  VertexId literal_vertex(Literal lit) const;
  VertexId clause_vertex(std::size_t clause) const;
  VertexId spare_vertex() const;
  std::vector<std::string> comment_lines() const;
};

/// Times each literal appears across all clauses; max over literals.
std::uint32_t max_literal_appearances(const CnfInstance& cnf);

/// p = 0 selects the least odd prime above every literal's appearance count.
/// Throws PrimeTooSmall, MalformedClause, or InputError for non-odd-prime p.
NaeGadget build_nae_gadget(const CnfInstance& cnf, std::uint64_t p = 0);

struct NaeReport {
  std::uint64_t p;
  Count eo_count;
  Count nae_count;
  Count unanimous_count;  // orientations with every mate bundle unanimous
  bool congruent;         // eo_count = nae_count (mod p)
  bool exact_special;     // unanimous_count = nae_count
};

NaeReport verify_nae_congruence(const CnfInstance& cnf, std::uint64_t p = 0,
                                const EngineOptions& options = {});

}  // namespace eulercount
