#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

// Exact integer primitives: factorization, integer logarithm, p-adic order,
// Legendre valuation, base-p carry counting and CRT recombination.
// All routines are pure and use only integer arithmetic; overflow raises
// std::overflow_error, domain violations raise std::invalid_argument.

namespace binomod {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct PrimePower {
  u64 p = 0;        // prime base
  u64 b = 0;        // exponent, >= 1
  u64 modulus = 0;  // p^b
};

struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> factors;  // strictly increasing in p
};

// Deterministic trial-division primality check.
bool is_prime(u64 n);

// Unique prime factorization of m >= 1; factorize(1) has no factors.
Factorization factorize(u64 m);

// Largest e with p^e <= x, by repeated multiplication (no floating point).
// Requires p >= 2 and x >= 1.
u64 ilog(u64 p, u64 x);

// p-adic order: max{k : p^k | n}. Requires p >= 2 and n >= 1.
u64 ord(u64 p, u64 n);

// Legendre valuation ord_p(m!) as the finite sum of floor(m / p^l).
u64 theta(u64 p, u64 m);

// Number of carries when adding a and b in base p (Kummer's theorem gives
// ord_p(C(a+b, b)) without touching the binomial coefficient itself).
u64 carries(u64 p, u64 a, u64 b);

// Unique r < prod(moduli) with r = residue (mod modulus) for every pair.
// Moduli must be pairwise coprime, each residue below its modulus.
u64 crt_combine(std::span<const std::pair<u64, u64>> residues);

// Euler totient, read off a factorization.
u64 totient(const Factorization& f);

// p^e with overflow detection.
u64 checked_pow(u64 p, u64 e);
u64 checked_mul(u64 a, u64 b);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
// Inverse of a unit mod m (extended Euclid); requires gcd(a, m) = 1.
u64 inv_mod(u64 a, u64 m);

}  // namespace binomod
