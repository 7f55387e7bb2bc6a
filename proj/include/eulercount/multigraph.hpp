#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eulercount {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Vertex ids 1..n, plus the distinguished vertex 0 when `with_origin` is set.
/// Reduction gadgets use vertex 0 as their extra root vertex.
struct VertexDomain {
  VertexId n = 0;
  bool with_origin = false;

  bool contains(VertexId v) const noexcept {
    return (v >= 1 && v <= n) || (with_origin && v == 0);
  }
  /// Size of arrays indexed directly by vertex id.
  std::size_t bound() const noexcept { return static_cast<std::size_t>(n) + 1; }
  std::vector<VertexId> ids() const;

  friend bool operator==(const VertexDomain&, const VertexDomain&) = default;
};

struct Edge {
  VertexId a;
  VertexId b;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected loop-free multigraph. Edge ids are positions in the edge list.
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws InputError on loops or endpoints outside the domain.
  Multigraph(VertexId n, std::vector<Edge> edges, bool with_origin = false);

  VertexId vertex_count() const noexcept { return domain_.n; }
  bool with_origin() const noexcept { return domain_.with_origin; }
  const VertexDomain& domain() const noexcept { return domain_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool contains(VertexId v) const noexcept { return domain_.contains(v); }

  /// Degree per vertex id, parallel edges counted with multiplicity.
  std::vector<std::uint32_t> degrees() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  VertexDomain domain_;
  std::vector<Edge> edges_;
};

/// d_v for every vertex of an even-degree multigraph; degree(v) = 2 * d_v.
class HalfDegreeProfile {
 public:
  HalfDegreeProfile(VertexDomain domain, std::vector<std::uint32_t> half)
      : domain_(domain), half_(std::move(half)) {}

  std::uint32_t operator[](VertexId v) const { return half_.at(v); }
  const VertexDomain& domain() const noexcept { return domain_; }
  /// Sum of d_v over all vertices; equals the edge count.
  std::uint64_t total() const;

 private:
  VertexDomain domain_;
  std::vector<std::uint32_t> half_;
};

/// One bit per edge: set means the edge runs from endpoint a to endpoint b.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<bool> bits) : bits_(std::move(bits)) {}

  std::size_t size() const noexcept { return bits_.size(); }
  bool forward(EdgeId e) const { return bits_.at(e); }
  const std::vector<bool>& bits() const noexcept { return bits_; }

  VertexId tail(const Edge& edge, EdgeId e) const { return forward(e) ? edge.a : edge.b; }
  VertexId head(const Edge& edge, EdgeId e) const { return forward(e) ? edge.b : edge.a; }

  friend auto operator<=>(const Orientation&, const Orientation&) = default;
  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<bool> bits_;
};

struct Arc {
  VertexId tail;
  VertexId head;

  friend bool operator==(const Arc&, const Arc&) = default;
};

class DirectedMultigraph {
 public:
  DirectedMultigraph() = default;
  /// Throws InputError on loops or endpoints outside the domain.
  DirectedMultigraph(VertexId n, std::vector<Arc> arcs, bool with_origin = false);

  VertexId vertex_count() const noexcept { return domain_.n; }
  bool with_origin() const noexcept { return domain_.with_origin; }
  const VertexDomain& domain() const noexcept { return domain_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const Arc& arc(EdgeId a) const { return arcs_.at(a); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  bool contains(VertexId v) const noexcept { return domain_.contains(v); }

  std::vector<std::uint32_t> out_degrees() const;
  std::vector<std::uint32_t> in_degrees() const;

  friend bool operator==(const DirectedMultigraph&, const DirectedMultigraph&) = default;

 private:
  VertexDomain domain_;
  std::vector<Arc> arcs_;
};

/// Parses the `p euler <n> <m>` edge-list format. Errors carry line numbers.
Multigraph parse_graph(std::string_view text);

/// Inverse of parse_graph. Vertex 0 of a graph with an origin is written as
/// n + 1. `comments` are emitted as `c` lines right after the header.
std::string serialize_graph(const Multigraph& g, std::span<const std::string> comments = {});

/// Throws OddDegree for the first odd-degree vertex.
HalfDegreeProfile half_degrees(const Multigraph& g);

bool all_degrees_even(const Multigraph& g);

/// True when the vertices of positive degree form one connected component.
/// Vacuously true for edgeless graphs.
bool support_connected(const Multigraph& g);
bool support_connected(const DirectedMultigraph& d);

/// Even degrees, connected support and at least one edge.
bool is_eulerian(const Multigraph& g);

/// True when in-degree equals out-degree everywhere, the support is weakly
/// connected and there is at least one arc.
bool is_eulerian(const DirectedMultigraph& d);

/// Vertices of positive degree, ascending.
std::vector<VertexId> support(const Multigraph& g);

/// Replaces every edge of a parallel bundle except its first by a path of
/// length two through a fresh vertex. Fresh ids start at n + 1.
Multigraph subdivide_parallel(const Multigraph& g);

/// Arc i is edge i directed according to bit i. Throws InputError on a size
/// mismatch.
DirectedMultigraph apply_orientation(const Multigraph& g, const Orientation& o);

}  // namespace eulercount
