#include "eulercount/linalg.hpp"

#include <utility>

#include "eulercount/errors.hpp"

namespace eulercount {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : dim_(rows.size()), cells_(rows.size() * rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw InputError("IntMatrix rows must form a square");
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

mpz_class det_exact(IntMatrix a) {
  const std::size_t k = a.dim();
  if (k == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (a(p, p) == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < k && a(swap_row, p) == 0) ++swap_row;
      if (swap_row == k) return 0;
      for (std::size_t c = 0; c < k; ++c) std::swap(a(p, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        mpz_class t = a(p, p) * a(i, j) - a(i, p) * a(p, j);
        // Sylvester's identity guarantees exactness.
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, p) = 0;
    }
    prev = a(p, p);
  }
  mpz_class det = a(k - 1, k - 1);
  if (sign < 0) det = -det;
  return det;
}

IntMatrix out_laplacian_minor(const DirectedMultigraph& d, std::span<const std::uint64_t> weights,
                              VertexId root) {
  auto all = d.domain().ids();
  return out_laplacian_minor_over(d, weights, root, all);
}

IntMatrix out_laplacian_minor_over(const DirectedMultigraph& d,
                                   std::span<const std::uint64_t> weights, VertexId root,
                                   std::span<const VertexId> keep) {
  if (!d.contains(root)) throw InputError("root " + std::to_string(root) + " out of range");
  if (!weights.empty() && weights.size() != d.arc_count())
    throw InputError("expected one weight per arc");

  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> row(d.domain().bound(), kAbsent);
  std::size_t dim = 0;
  for (VertexId v : keep)
    if (v != root) row.at(v) = dim++;

  IntMatrix lap(dim);
  for (std::size_t i = 0; i < d.arc_count(); ++i) {
    const auto& arc = d.arc(static_cast<EdgeId>(i));
    const std::uint64_t w = weights.empty() ? 1 : weights[i];
    const std::size_t t = row[arc.tail];
    const std::size_t h = row[arc.head];
    if (t == kAbsent) continue;
    mpz_class mw;
    mpz_set_ui(mw.get_mpz_t(), w);
    lap(t, t) += mw;
    if (h != kAbsent) lap(t, h) -= mw;
  }
  return lap;
}

}  // namespace eulercount
