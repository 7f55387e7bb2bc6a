#include <doctest.h>

#include <algorithm>
#include <map>

#include "eulercount/counting.hpp"
#include "eulercount/errors.hpp"
#include "fixtures.hpp"

using namespace eulercount;
using namespace eulercount::testing;

namespace {

// The walk may leave the root by any of its arcs first, so the root's list
// is only determined up to rotation.
bool same_up_to_root_rotation(ExitOrderings x, const ExitOrderings& y, VertexId root) {
  if (x.size() != y.size()) return false;
  auto& xr = x[root];
  for (std::size_t k = 0; k <= xr.size(); ++k) {
    if (x == y) return true;
    if (!xr.empty()) std::rotate(xr.begin(), xr.begin() + 1, xr.end());
  }
  return false;
}

}  // namespace

TEST_CASE("canonical form is the least rotation") {
  CircuitSequence c({{2, true}, {0, true}, {1, true}});
  auto canon = c.canonical();
  REQUIRE(canon.size() == 3);
  CHECK(canon.steps()[0] == Traversal{0, true});
  CHECK(canon.steps()[1] == Traversal{1, true});
  CHECK(canon.steps()[2] == Traversal{2, true});
  CHECK(c == CircuitSequence({{1, true}, {2, true}, {0, true}}));
  // Reversal is a different circuit.
  CHECK_FALSE(c == CircuitSequence({{1, false}, {0, false}, {2, false}}));
}

TEST_CASE("is_valid_circuit") {
  // Triangle edges 1-2, 2-3, 1-3: 1 -> 2 -> 3 -> 1.
  CHECK(is_valid_circuit(triangle(), CircuitSequence({{0, true}, {1, true}, {2, false}})));
  CHECK_FALSE(is_valid_circuit(triangle(), CircuitSequence({{0, true}, {1, true}, {2, true}})));
  CHECK_FALSE(is_valid_circuit(triangle(), CircuitSequence({{0, true}, {1, true}})));
  CHECK_FALSE(is_valid_circuit(triangle(), CircuitSequence({{0, true}, {0, false}, {2, false}})));
}

TEST_CASE("enumerate_circuits lists the triangle in both directions") {
  auto all = enumerate_circuits(triangle());
  REQUIRE(all.size() == 2);
  for (const auto& c : all) CHECK(is_valid_circuit(triangle(), c));
  CHECK(all[0] != all[1]);
}

TEST_CASE("orb and exit ordering determine a circuit, and every circuit arises d_r times") {
  for (const auto& g : eulerian_multigraph_corpus(7)) {
    const auto circuits = enumerate_circuits(g);
    for (VertexId r : support(g)) {
      const auto dr = half_degrees(g)[r];
      std::map<CircuitSequence, std::uint32_t> hits;
      for_each_orb(g, r, [&](const Orb& orb) {
        CHECK(is_valid_orb(g, orb));
        for_each_exit_ordering(g, orb, [&](const ExitOrderings& ord) {
          const auto c = circuit_from_orb(g, orb, ord);
          CHECK(is_valid_circuit(g, c));
          ++hits[c];
          const auto back = circuit_to_orb(g, c, r);
          if (back == orb) CHECK(same_up_to_root_rotation(exit_orderings_of(g, c, orb), ord, r));
        });
      });
      CHECK(hits.size() == circuits.size());
      for (const auto& c : circuits) CHECK(hits[c] == dr);
    }
  }
}

TEST_CASE("circuit_to_orb recovers an orb that regenerates the circuit") {
  for (const auto& g : eulerian_multigraph_corpus(7)) {
    for (const auto& c : enumerate_circuits(g)) {
      for (VertexId r : support(g)) {
        const auto orb = circuit_to_orb(g, c, r);
        CHECK(is_valid_orb(g, orb));
        CHECK(orb.root == r);
        const auto ord = exit_orderings_of(g, c, orb);
        CHECK(circuit_from_orb(g, orb, ord) == c);
      }
    }
  }
}

TEST_CASE("circuit_from_orb rejects invalid input") {
  Orb bad{Orientation({true, true, true}), {0, 1}, 1};
  CHECK_FALSE(is_valid_orb(triangle(), bad));
  CHECK_THROWS_AS(circuit_from_orb(triangle(), bad, ExitOrderings(4)), InvalidOrb);
  CHECK_THROWS_AS(circuit_to_orb(triangle(), CircuitSequence({{0, true}}), 1), InvalidCircuit);
}
