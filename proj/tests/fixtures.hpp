#pragma once

#include <string>
#include <vector>

#include "eulercount/multigraph.hpp"

namespace eulercount::testing {

Multigraph digon();
Multigraph triangle();
Multigraph c4();
/// Triangles {1,2,5} and {3,4,5} sharing vertex 5.
Multigraph bowtie();
Multigraph k5();
Multigraph path2();
Multigraph two_triangles();
/// Three digons hanging off vertex 1; vertex 1 has degree 6.
Multigraph flower3();

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

/// digon, triangle, C4, bowtie, K5.
std::vector<NamedGraph> curated_fixtures();

/// Every connected even-degree loopless multigraph with 1 <= m <= max_edges,
/// one representative per isomorphism class. Built from closed walks in
/// restricted-growth labelling, since each such graph has an Euler circuit.
std::vector<Multigraph> eulerian_multigraph_corpus(std::size_t max_edges);

/// Every Eulerian orientation of every graph in the corpus (so every Eulerian
/// digraph with at most max_arcs arcs, up to isomorphism, at least once).
std::vector<DirectedMultigraph> eulerian_digraph_corpus(std::size_t max_arcs);

}  // namespace eulercount::testing
