#pragma once

#include <vector>

#include "binomod/arith.hpp"

// Binomial-coefficient residues. The convention C(n,x) = 0 for n < x is in
// force everywhere; binom_exact_mod is the slow Pascal-rule oracle against
// which the per-prime fast paths and the CRT-combined evaluator are checked.

namespace binomod {

struct BinomQuery {
  u64 n = 0;
  u64 x = 0;
  u64 m = 1;  // m = 0 rejected
};

// Row-length limit of the Pascal oracle; BINOMOD_ORACLE_BOUND overrides the
// default of 10^6.
u64 oracle_bound();

// C(n,x) mod m by iterating Pascal's rule, one row of length x+1.
// Independent of every fast path below. Rejects m = 0 and n > oracle_bound().
u64 binom_exact_mod(u64 n, u64 x, u64 m);

// C(n,x) mod p as the product of base-p digit binomials (Lucas).
u64 binom_mod_prime(u64 n, u64 x, u64 p);

// C(n, p^k) mod p evaluated as floor(n / p^k) mod p.
u64 binom_power_column(u64 n, u64 k, u64 p);

// C(n,x) mod p^b: Kummer valuation plus blockwise p-removed factorials.
u64 binom_mod_prime_power(u64 n, u64 x, const PrimePower& pp);

// C(n,x) mod m, CRT-combined over the prime-power factors of m.
u64 binom_mod(const BinomQuery& q);

// Incremental generator for the sequence a_n = C(n,x) mod m, backed by one
// Pascal row. at(n) extends the stored prefix on demand.
class BinomSequence {
 public:
  BinomSequence(u64 x, u64 m);

  u64 at(u64 n);
  u64 x() const { return x_; }
  u64 m() const { return m_; }

 private:
  u64 x_;
  u64 m_;
  std::vector<u64> row_;  // C(n_last, 0..x) mod m
  std::vector<u64> seq_;  // a_0 .. a_{n_last}
};

}  // namespace binomod
