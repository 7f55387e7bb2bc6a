#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "eulercount/engine.hpp"
#include "eulercount/linalg.hpp"
#include "eulercount/multigraph.hpp"

namespace eulercount {

enum class OrbEngine { naive, bundled };

// ---------------------------------------------------------------------------
// Eulerian orientations

/// Streams the Eulerian orientations of a multigraph. Edges are decided in id
/// order, each trying "b -> a" before "a -> b"; a branch is pruned once some
/// vertex can no longer be balanced by its undecided edges. Single consumer.
class EulerianOrientationStream {
 public:
  explicit EulerianOrientationStream(const Multigraph& g, NodeBudget* budget = nullptr);
  ~EulerianOrientationStream();
  EulerianOrientationStream(EulerianOrientationStream&&) noexcept;
  EulerianOrientationStream& operator=(EulerianOrientationStream&&) noexcept;

  std::optional<Orientation> next();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

/// All Eulerian orientations in stream order.
std::vector<Orientation> enumerate_eulerian_orientations(const Multigraph& g);

/// Number of Eulerian orientations; 0 for edgeless or odd-degree graphs.
/// The bundled engine sums binomial weights over per-bundle split counts
/// instead of visiting each orientation.
Count count_eulerian_orientations(const Multigraph& g, const EngineOptions& options = {},
                                  OrbEngine engine = OrbEngine::naive);

/// Like the bundled orientation count, but only over orientations in which
/// every bundle containing an edge flagged in `unanimous` (one flag per edge
/// id) is oriented in one direction as a whole.
Count count_orientations_with_unanimous_bundles(const Multigraph& g,
                                                const std::vector<bool>& unanimous,
                                                const EngineOptions& options = {});

// ---------------------------------------------------------------------------
// Arborescences and directed circuits

/// Arborescences oriented toward `root` (every non-root support vertex has
/// exactly one outgoing tree arc), parallel arcs distinguished. Vertices
/// without arcs are ignored. Computed with the Matrix-Tree theorem.
Count count_arborescences(const DirectedMultigraph& d, VertexId root);

/// Exhaustive arborescence listing; each tree is passed as ascending arc ids.
void enumerate_arborescences(const DirectedMultigraph& d, VertexId root,
                             const std::function<void(std::span<const EdgeId>)>& visit,
                             NodeBudget* budget = nullptr);

/// Directed Eulerian circuits via BEST: arborescences(r) * prod (d_v - 1)!.
/// 0 unless the digraph is Eulerian.
Count count_circuits_directed_best(const DirectedMultigraph& d);

/// Independent oracle: closed Eulerian arc trails from the least support
/// vertex r, divided by its out-degree.
Count brute_force_directed_circuits(const DirectedMultigraph& d, const EngineOptions& options = {});

// ---------------------------------------------------------------------------
// Orbs

struct Orb {
  Orientation orientation;
  std::vector<EdgeId> tree_arcs;  // ascending
  VertexId root = 0;

  friend auto operator<=>(const Orb&, const Orb&) = default;
  friend bool operator==(const Orb&, const Orb&) = default;
};

bool is_valid_orb(const Multigraph& g, const Orb& orb);

/// Sum over Eulerian orientations of the arborescence count toward `root`.
/// Throws InputError when root is not a vertex of g; 0 when g is not
/// Eulerian.
Count count_orbs(const Multigraph& g, VertexId root, const EngineOptions& options = {});

/// Same value as count_orbs, aggregating bundles of parallel edges: each
/// balanced split vector contributes prod C(|B|, k_B) times a weighted
/// Matrix-Tree determinant.
Count count_orbs_bundled(const Multigraph& g, VertexId root, const EngineOptions& options = {});

Count count_orbs(const Multigraph& g, VertexId root, OrbEngine engine,
                 const EngineOptions& options = {});

/// Visits every orb of g rooted at `root`, orientations in stream order and
/// trees in enumerate_arborescences order.
void for_each_orb(const Multigraph& g, VertexId root, const std::function<void(const Orb&)>& visit,
                  NodeBudget* budget = nullptr);

// ---------------------------------------------------------------------------
// Undirected circuits

struct Traversal {
  EdgeId edge;
  bool forward;  // a -> b

  friend auto operator<=>(const Traversal&, const Traversal&) = default;
  friend bool operator==(const Traversal&, const Traversal&) = default;
};

/// Cyclic sequence of edge traversals. Two sequences denote the same circuit
/// when one is a rotation of the other; reversal gives a different circuit.
class CircuitSequence {
 public:
  CircuitSequence() = default;
  explicit CircuitSequence(std::vector<Traversal> steps) : steps_(std::move(steps)) {}

  std::span<const Traversal> steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }

  /// The lexicographically least rotation.
  CircuitSequence canonical() const;

  friend bool operator==(const CircuitSequence& x, const CircuitSequence& y) {
    return x.canonical().steps_ == y.canonical().steps_;
  }
  friend auto operator<=>(const CircuitSequence& x, const CircuitSequence& y) {
    return x.canonical().steps_ <=> y.canonical().steps_;
  }

 private:
  std::vector<Traversal> steps_;
};

/// Uses every edge once, consecutive traversals meet, and the walk closes.
bool is_valid_circuit(const Multigraph& g, const CircuitSequence& c);

/// prod over support vertices of (d_v - 1)!. Requires even degrees.
Count exit_order_factor(const Multigraph& g);

/// Eulerian circuits: orbs(root) * prod (d_v - 1)!. Every orb yields exactly
/// that many circuits. 0 when g is not Eulerian.
Count count_circuits_undirected(const Multigraph& g, VertexId root,
                                const EngineOptions& options = {},
                                OrbEngine engine = OrbEngine::naive);

/// Independent oracle: Eulerian closed trails from the least support vertex
/// r, divided by d_r. Does not touch orientations or arborescences.
Count brute_force_circuits(const Multigraph& g, const EngineOptions& options = {});

/// Every Eulerian circuit of g once, in canonical form, sorted.
std::vector<CircuitSequence> enumerate_circuits(const Multigraph& g,
                                                const EngineOptions& options = {});

/// exit_orderings[v] lists the non-tree outgoing arcs of v in the order the
/// walk uses them; for the root it lists all outgoing arcs. Indexed by
/// vertex id.
using ExitOrderings = std::vector<std::vector<EdgeId>>;

/// Walks from the root taking arcs in the given order and falling back to a
/// vertex's tree arc only when nothing else is left. Throws InvalidOrb.
CircuitSequence circuit_from_orb(const Multigraph& g, const Orb& orb,
                                 const ExitOrderings& exit_orderings);

/// Visits all d_r! * prod_{v != r} (d_v - 1)! exit orderings of an orb.
void for_each_exit_ordering(const Multigraph& g, const Orb& orb,
                            const std::function<void(const ExitOrderings&)>& visit);

/// The orientation induced by c plus the exit-edge arborescence, reading c
/// from the first traversal of its canonical form that leaves `root`.
/// Throws InvalidCircuit.
Orb circuit_to_orb(const Multigraph& g, const CircuitSequence& c, VertexId root);

/// The exit orderings under which circuit_from_orb(g, orb, ·) reproduces c
/// read from the orb's root, when orb = circuit_to_orb(g, c, orb.root).
ExitOrderings exit_orderings_of(const Multigraph& g, const CircuitSequence& c, const Orb& orb);

}  // namespace eulercount
