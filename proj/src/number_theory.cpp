#include "eulercount/number_theory.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "eulercount/errors.hpp"

namespace eulercount {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

mpz_class to_mpz(std::uint64_t x) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
  return z;
}

}  // namespace

bool is_prime(std::uint64_t k) {
  if (k < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (k % p == 0) return k == p;
  }
  std::uint64_t d = k - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, k);
    if (x == 1 || x == k - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, k);
      if (x == k - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_strictly_between(std::int64_t a, std::int64_t b) {
  std::vector<std::uint64_t> out;
  if (b <= 2) return out;
  const auto lo = static_cast<std::uint64_t>(std::max<std::int64_t>(a + 1, 2));
  const auto hi = static_cast<std::uint64_t>(b);  // exclusive
  if (lo >= hi) return out;

  // Segmented sieve over [lo, hi) with base primes up to sqrt(hi).
  std::uint64_t root = 1;
  while ((root + 1) * (root + 1) < hi) ++root;
  std::vector<bool> small_composite(root + 1, false);
  std::vector<bool> composite(hi - lo, false);
  for (std::uint64_t p = 2; p <= root; ++p) {
    if (small_composite[p]) continue;
    for (std::uint64_t q = p * p; q <= root; q += p) small_composite[q] = true;
    std::uint64_t first = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t q = first; q < hi; q += p) composite[q - lo] = true;
  }
  for (std::uint64_t q = lo; q < hi; ++q)
    if (!composite[q - lo]) out.push_back(q);
  return out;
}

std::uint64_t next_odd_prime(std::uint64_t k) {
  std::uint64_t q = std::max<std::uint64_t>(k + 1, 3);
  while (!is_prime(q)) ++q;
  return q;
}

PrimeBoundReport prime_product_bound(std::uint64_t n) {
  if (n < 4) throw InputError("the prime-product bound is stated for n >= 4, got " +
                              std::to_string(n));
  PrimeBoundReport report{n, 1, 0, false};
  for (std::uint64_t q :
       primes_strictly_between(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n * n)))
    report.product *= to_mpz(q);
  mpz_fac_ui(report.bound.get_mpz_t(), n);
  report.bound <<= n;
  report.holds = report.product >= report.bound;
  return report;
}

std::uint64_t reduce_mod(const mpz_class& a, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), to_mpz(p).get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

std::uint64_t mod_inverse(const mpz_class& a, std::uint64_t p) {
  if (p < 2) throw InputError("modulus must be at least 2");
  const std::uint64_t x = reduce_mod(a, p);
  if (x == 0) throw NotInvertible(a.get_str() + " is not invertible modulo " + std::to_string(p));

  // Extended Euclid on (x, p); old_s tracks the coefficient of x.
  __int128 old_r = x, r = p, old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) throw NotInvertible(a.get_str() + " shares a factor with " + std::to_string(p));
  __int128 inv = old_s % static_cast<__int128>(p);
  if (inv < 0) inv += p;
  return static_cast<std::uint64_t>(inv);
}

Count crt_reconstruct(const ResidueSystem& rs) {
  if (rs.empty()) throw InputError("empty residue system");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (!is_prime(rs[i].modulus) || rs[i].modulus == 2)
      throw InputError("modulus " + std::to_string(rs[i].modulus) + " is not an odd prime");
    if (rs[i].residue >= rs[i].modulus)
      throw InputError("residue " + std::to_string(rs[i].residue) + " not reduced modulo " +
                       std::to_string(rs[i].modulus));
    for (std::size_t j = 0; j < i; ++j)
      if (rs[j].modulus == rs[i].modulus)
        throw InputError("modulus " + std::to_string(rs[i].modulus) + " repeated");
  }

  // Garner-style accumulation: x stays the solution modulo the running product.
  mpz_class x = to_mpz(rs[0].residue);
  mpz_class modulus = to_mpz(rs[0].modulus);
  for (std::size_t i = 1; i < rs.size(); ++i) {
    const std::uint64_t p = rs[i].modulus;
    const std::uint64_t current = reduce_mod(x, p);
    const std::uint64_t gap = (rs[i].residue + p - current) % p;
    const std::uint64_t t = mul_mod(gap, mod_inverse(modulus, p), p);
    x += modulus * to_mpz(t);
    modulus *= to_mpz(p);
  }
  return x;
}

}  // namespace eulercount
