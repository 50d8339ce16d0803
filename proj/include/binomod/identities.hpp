#pragma once

#include <optional>

#include "binomod/arith.hpp"
#include "binomod/report.hpp"

// Executable checks for the identities behind the periodicity results:
// hockey-stick sums, block-sum congruences, the binomial primality criterion
// and the x = p^c - 1 special-case period formulas.

namespace binomod {

// Sum_{i=x}^{n-1} C(i,x) = C(n, x+1), both sides exact. Requires n >= x+1.
CheckReport hockey_stick_check(u64 x, u64 n);

// Sum_{j=n}^{n+mk-1} C(j,x) = 0 (mod m), with C(j,x) = 0 for j < x.
// k must be a verified period of the sequence mod m; anything else is a
// precondition violation, not a failing check.
CheckReport block_sum_check(u64 m, u64 x, u64 n, u64 k);

// Least n in [p+2, search_limit] with C(n,p) - floor(n/p) not divisible by p,
// or nullopt when the whole window is clean.
std::optional<u64> prime_counterexample(u64 p, u64 search_limit);
u64 default_prime_search_limit(u64 p);  // 5 p^2

// true iff prime_counterexample finds nothing in the window.
bool is_prime_binomial(u64 p, u64 search_limit);

// C(2 p^c - 1, p^c) = 1 (mod p).
CheckReport central_identity_check(u64 p, u64 c);

// l(m_c, p^c - 1) = m_c^2 p^{c-b-1} and l(m_c, p^c) = m_c^2 p^{c-b}, where
// m_c = p^b * prod q_i^{b_i} and each extra factor has b_i = ilog(q_i, p^c).
// Ill-posed inputs (wrong b_i, q_i = p, c < b with no integer period) raise
// std::invalid_argument instead of reporting a failure.
CheckReport special_period_formula(u64 p, u64 c, u64 b, const std::vector<PrimePower>& other_factors);

}  // namespace binomod
