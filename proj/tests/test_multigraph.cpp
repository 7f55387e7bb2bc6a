#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "eulercount/counting.hpp"
#include "eulercount/errors.hpp"
#include "eulercount/multigraph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace eulercount;
using namespace eulercount::testing;

TEST_CASE("parse_graph reads edge lists in file order") {
  auto tri = parse_graph("p euler 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(tri == triangle());

  auto dg = parse_graph("c a digon\np euler 2 2\ne 1 2\nc between edges\ne 1 2");
  CHECK(dg == digon());
  CHECK(dg.edge(0) == Edge{1, 2});
  CHECK(dg.edge(1) == Edge{1, 2});
}

TEST_CASE("parse_graph reports the offending line") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("p euler 2 1\ne 1 1\n") == 2);  // loop
  CHECK(line_of("p euler 2 1\ne 1 3\n") == 2);  // out of range
  CHECK(line_of("p euler 2 1\ne 0 1\n") == 2);
  CHECK(line_of("p graph 2 1\ne 1 2\n") == 1);  // malformed header
  CHECK(line_of("e 1 2\np euler 2 1\n") == 1);  // edge before header
  CHECK(line_of("p euler 3 1\ne 1 2\ne 2 3\n") == 3);  // too many edges
  CHECK(line_of("p euler 3 2\ne 1 2\n") > 0);         // too few edges
  CHECK(line_of("p euler 3 1\nx 1 2\n") == 2);
  CHECK_THROWS_WITH_AS(parse_graph("p euler 2 1\ne 1 1"), doctest::Contains("loop"), ParseError);
}

TEST_CASE("serialize then parse is the identity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const VertexId n = 2 + rng() % 6;
    std::vector<Edge> edges;
    const int m = rng() % 10;
    for (int i = 0; i < m; ++i) {
      VertexId a = 1 + rng() % n, b = 1 + rng() % n;
      if (a == b) b = a % n + 1;
      edges.push_back({a, b});
    }
    Multigraph g(n, edges);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("graphs with vertex 0 serialize it as n + 1") {
  Multigraph g(2, {{1, 2}, {1, 0}, {2, 0}}, true);
  const auto text = serialize_graph(g, std::vector<std::string>{"note"});
  CHECK(text == "p euler 3 3\nc note\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST_CASE("half_degrees") {
  auto tri = half_degrees(triangle());
  CHECK(tri[1] == 1);
  CHECK(tri[2] == 1);
  CHECK(tri[3] == 1);
  CHECK(tri.total() == 3);

  auto bt = half_degrees(bowtie());
  for (VertexId v = 1; v <= 4; ++v) CHECK(bt[v] == 1);
  CHECK(bt[5] == 2);
  CHECK(bt.total() == bowtie().edge_count());

  CHECK_THROWS_AS(half_degrees(path2()), OddDegree);
  try {
    half_degrees(path2());
  } catch (const OddDegree& e) {
    CHECK(e.vertex() == 1);
  }
}

TEST_CASE("is_eulerian") {
  CHECK(is_eulerian(triangle()));
  CHECK(is_eulerian(digon()));
  CHECK_FALSE(is_eulerian(two_triangles()));
  CHECK_FALSE(is_eulerian(Multigraph(3, {})));
  CHECK_FALSE(is_eulerian(path2()));
  // Isolated vertices do not break connectivity of the support.
  CHECK(is_eulerian(Multigraph(5, {{1, 2}, {2, 3}, {3, 1}})));
}

TEST_CASE("subdivide_parallel") {
  auto sub = subdivide_parallel(digon());
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edges().size() == 3);
  CHECK(sub.edge(0) == Edge{1, 2});
  CHECK(sub.edge(1) == Edge{1, 3});
  CHECK(sub.edge(2) == Edge{3, 2});

  CHECK(subdivide_parallel(triangle()) == triangle());

  // Digon orbs rooted at 1 before and after subdivision, by brute force.
  CHECK(brute_force_orbs(digon(), 1) == 2);
  CHECK(brute_force_orbs(sub, 1) == 2);
}

TEST_CASE("subdivide_parallel output is simple and keeps orb counts") {
  for (const auto& g : eulerian_multigraph_corpus(6)) {
    const auto sub = subdivide_parallel(g);
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const auto& e : sub.edges()) CHECK(pairs.insert(std::minmax(e.a, e.b)).second);
    for (VertexId r : support(g)) CHECK(count_orbs(sub, r) == count_orbs(g, r));
  }
}

TEST_CASE("apply_orientation") {
  auto tri = apply_orientation(triangle(), Orientation({true, true, true}));
  CHECK(tri.arc(0) == Arc{1, 2});
  CHECK(tri.arc(1) == Arc{2, 3});
  CHECK(tri.arc(2) == Arc{1, 3});
  CHECK_FALSE(is_eulerian(tri));

  auto dg = apply_orientation(digon(), Orientation({true, false}));
  CHECK(dg.arc(0) == Arc{1, 2});
  CHECK(dg.arc(1) == Arc{2, 1});

  // 1->2, 2->3, 3->1
  auto cyc = apply_orientation(triangle(), Orientation({true, true, false}));
  CHECK(is_eulerian(cyc));

  CHECK_THROWS_AS(apply_orientation(triangle(), Orientation({true})), InputError);
}

TEST_CASE("multigraph constructor rejects loops and bad endpoints") {
  CHECK_THROWS_AS(Multigraph(2, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Multigraph(2, {{1, 3}}), InputError);
  CHECK_THROWS_AS(Multigraph(2, {{0, 1}}), InputError);
  CHECK_NOTHROW(Multigraph(2, {{0, 1}}, true));
}
