#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "eulercount/linalg.hpp"

namespace eulercount {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t k);

/// Primes q with a < q < b, ascending.
std::vector<std::uint64_t> primes_strictly_between(std::int64_t a, std::int64_t b);

/// Least odd prime strictly greater than k.
std::uint64_t next_odd_prime(std::uint64_t k);

struct PrimeBoundReport {
  std::uint64_t n;
  mpz_class product;  // primes strictly between n and n^2
  mpz_class bound;    // n! * 2^n
  bool holds;
};

/// Evaluates the prime-product bound for one n >= 4. Throws InputError below 4.
PrimeBoundReport prime_product_bound(std::uint64_t n);

/// b in [1, p) with a * b = 1 (mod p). Throws NotInvertible when p | a.
std::uint64_t mod_inverse(const mpz_class& a, std::uint64_t p);

struct Residue {
  std::uint64_t modulus;
  std::uint64_t residue;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Pairs of distinct odd primes and reduced residues.
using ResidueSystem = std::vector<Residue>;

/// The unique x in [0, prod moduli) matching every residue. Throws InputError
/// on an empty system, repeated or non-prime moduli, or unreduced residues.
Count crt_reconstruct(const ResidueSystem& rs);

/// a mod p as a machine word.
std::uint64_t reduce_mod(const mpz_class& a, std::uint64_t p);

}  // namespace eulercount
