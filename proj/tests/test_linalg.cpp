#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "eulercount/counting.hpp"
#include "eulercount/errors.hpp"
#include "eulercount/linalg.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace eulercount;
using namespace eulercount::testing;

namespace {

DirectedMultigraph directed_triangle() { return DirectedMultigraph(3, {{1, 2}, {2, 3}, {3, 1}}); }

DirectedMultigraph doubled_k3() {
  return DirectedMultigraph(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 3}, {3, 1}});
}

}  // namespace

TEST_CASE("det_exact small cases") {
  CHECK(det_exact(IntMatrix{{2, -1}, {-1, 2}}) == 3);
  CHECK(det_exact(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(det_exact(IntMatrix()) == 1);
  for (std::size_t k = 1; k <= 6; ++k) {
    IntMatrix id(k);
    for (std::size_t i = 0; i < k; ++i) id(i, i) = 1;
    CHECK(det_exact(id) == 1);
  }
  // Zero leading pivot forces a row swap.
  CHECK(det_exact(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det_exact(IntMatrix{{0, 0, 1}, {0, 2, 0}, {3, 0, 0}}) == -6);
}

TEST_CASE("det_exact agrees with cofactor expansion on random small matrices") {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<int> entry(-3, 3);
  int cases = 0;
  for (std::size_t k = 1; k <= 5; ++k) {
    for (int trial = 0; trial < 400; ++trial, ++cases) {
      std::vector<std::vector<long>> raw(k, std::vector<long>(k));
      IntMatrix m(k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) m(r, c) = raw[r][c] = entry(rng);
      CHECK(det_exact(m) == cofactor_det(raw));
    }
  }
  CHECK(cases >= 1000);
}

TEST_CASE("det_exact of a permutation matrix is its sign") {
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    IntMatrix m(5);
    for (std::size_t i = 0; i < 5; ++i) m(i, perm[i]) = 1;
    int inversions = 0;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) inversions += perm[i] > perm[j];
    CHECK(det_exact(m) == (inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("out_laplacian_minor") {
  auto cyc = out_laplacian_minor(directed_triangle(), {}, 1);
  CHECK(cyc == IntMatrix{{1, -1}, {0, 1}});
  CHECK(det_exact(cyc) == 1);

  auto k3 = out_laplacian_minor(doubled_k3(), {}, 1);
  CHECK(k3 == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(det_exact(k3) == 3);

  auto single = out_laplacian_minor(DirectedMultigraph(2, {{1, 2}}), {}, 1);
  CHECK(single == IntMatrix{{0}});
  CHECK(det_exact(single) == 0);

  CHECK_THROWS_AS(out_laplacian_minor(directed_triangle(), {}, 4), InputError);
}

TEST_CASE("weighted minor matches multigraph with parallel arcs") {
  // Weight 2 on 1->2 equals two parallel copies.
  DirectedMultigraph weighted(3, {{1, 2}, {2, 1}, {2, 3}, {3, 1}});
  std::vector<std::uint64_t> w{2, 1, 1, 1};
  DirectedMultigraph expanded(3, {{1, 2}, {1, 2}, {2, 1}, {2, 3}, {3, 1}});
  for (VertexId r = 1; r <= 3; ++r)
    CHECK(det_exact(out_laplacian_minor(weighted, w, r)) ==
          det_exact(out_laplacian_minor(expanded, {}, r)));
}

TEST_CASE("Matrix-Tree determinant matches subset enumeration on every Eulerian digraph") {
  const auto corpus = eulerian_digraph_corpus(8);
  REQUIRE(!corpus.empty());
  for (const auto& d : corpus) {
    Count first = -1;
    for (VertexId r : d.domain().ids()) {
      const auto det = det_exact(out_laplacian_minor(d, {}, r));
      CHECK(det == subset_arborescences(d, r));
      if (first < 0) first = det;
      CHECK(det == first);  // root independence
    }
  }
}
