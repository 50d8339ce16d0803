#pragma once

#include <optional>
#include <vector>

#include "binomod/arith.hpp"
#include "binomod/report.hpp"

// Minimal period of a_n = C(n,x) mod m: the closed form
// l(m,x) = prod p_i^{floor(log_{p_i} x) + b_i}, the step recurrence in x,
// a brute-force minimality oracle and finite-window certificates.

namespace binomod {

struct PeriodExponent {
  u64 p = 0;  // prime factor of m
  u64 b = 0;  // ord_p(m)
  u64 e = 0;  // floor(log_p x), 0 when x = 0
};

struct PeriodResult {
  u64 m = 1;
  u64 x = 0;
  u64 length = 1;
  std::vector<PeriodExponent> exponents;
};

// Finite-window evidence that claimed_period is (or is not) a minimal period.
struct PeriodCertificate {
  u64 m = 1;
  u64 x = 0;
  u64 claimed_period = 1;
  u64 window_end = 0;
  bool periodic = false;
  bool minimal = false;
  std::optional<u64> counterexample_n;       // set iff !periodic
  std::optional<u64> smaller_period_found;   // set iff !minimal
};

// Closed-form minimal period. period_length(m, 0) = 1; period_length(1, x) = 1
// (mod 1 every k >= 1 is a period, so the minimum is 1). Rejects m = 0.
PeriodResult period_length(u64 m, u64 x);

// l(m) = l(m, m).
PeriodResult period_length_self(u64 m);

// Alternative convention for the trivial modulus, l(1,x) = x (x is the least
// column index past the zero prefix); kept for reference only,
// period_length(1, x) itself returns 1.
u64 period_length_mod_one_convention(u64 x);

// l(m, x+1) from l(m, x): times p when x+1 = p^c with p | m, else unchanged.
u64 step_period(u64 m, u64 x);

// Least k >= 1 with C(n+k,x) = C(n,x) (mod m) for all n in 0..window_end,
// scanning every k in turn. Default window_end = x + 2 * period_length(m,x).
u64 minimal_period_bruteforce(u64 m, u64 x, std::optional<u64> window_end = std::nullopt);

// Window check of a claimed period, by direct sequence comparison.
PeriodCertificate verify_period(u64 m, u64 x, u64 claimed_period, u64 window_end);

// m^2 <= l(m) <= m^{k+1} and m^2 | l(m).
CheckReport bounds_check(u64 m);

}  // namespace binomod
