#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "eulercount/multigraph.hpp"

namespace eulercount {

/// Exact nonnegative count. All counts can exceed 64 bits.
using Count = mpz_class;

/// Square matrix of arbitrary-precision integers, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t dim() const noexcept { return dim_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return cells_[r * dim_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return cells_[r * dim_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<mpz_class> cells_;
};

/// Determinant by Bareiss fraction-free elimination. The 0x0 determinant is 1.
mpz_class det_exact(IntMatrix mat);

/// Out-degree Laplacian of `d` with the root's row and column deleted. Rows
/// follow ascending vertex id (vertex 0 first when present). Its determinant
/// is the weighted number of arborescences oriented toward `root`.
/// `weights` holds one positive weight per arc; empty means unit weights.
IntMatrix out_laplacian_minor(const DirectedMultigraph& d, std::span<const std::uint64_t> weights,
                              VertexId root);

/// Same as out_laplacian_minor restricted to the vertices in `keep`
/// (ascending, root included or not; the root is always dropped).
IntMatrix out_laplacian_minor_over(const DirectedMultigraph& d,
                                   std::span<const std::uint64_t> weights, VertexId root,
                                   std::span<const VertexId> keep);

}  // namespace eulercount
