#include "binomod/period.hpp"

#include <stdexcept>

#include "binomod/binom.hpp"

namespace binomod {

PeriodResult period_length(u64 m, u64 x) {
  if (m == 0) throw std::invalid_argument("period_length: not periodic modulo 0");
  PeriodResult r;
  r.m = m;
  r.x = x;
  r.length = 1;
  if (x == 0 || m == 1) return r;
  Factorization f = factorize(m);
  for (const auto& pp : f.factors) {
    u64 e = ilog(pp.p, x);
    r.exponents.push_back({pp.p, pp.b, e});
    r.length = checked_mul(r.length, checked_pow(pp.p, e + pp.b));
  }
  return r;
}

PeriodResult period_length_self(u64 m) { return period_length(m, m); }

u64 period_length_mod_one_convention(u64 x) { return x; }

u64 step_period(u64 m, u64 x) {
  if (m < 2) throw std::invalid_argument("step_period: requires m >= 2");
  if (x == 0) throw std::invalid_argument("step_period: requires x >= 1");
  u64 len = period_length(m, x).length;
  // x+1 can be a power of at most one prime; only primes dividing m matter.
  u64 y = x + 1;
  for (const auto& pp : factorize(m).factors) {
    u64 t = y;
    while (t % pp.p == 0) t /= pp.p;
    if (t == 1) return checked_mul(len, pp.p);
  }
  return len;
}

u64 minimal_period_bruteforce(u64 m, u64 x, std::optional<u64> window_end) {
  if (m == 0) throw std::invalid_argument("minimal_period_bruteforce: m = 0");
  if (m == 1) return 1;
  u64 window = window_end ? *window_end : x + 2 * period_length(m, x).length;
  BinomSequence seq(x, m);
  for (u64 k = 1;; ++k) {
    bool ok = true;
    for (u64 n = 0; n <= window; ++n) {
      if (seq.at(n + k) != seq.at(n)) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
}

PeriodCertificate verify_period(u64 m, u64 x, u64 claimed_period, u64 window_end) {
  if (m == 0) throw std::invalid_argument("verify_period: m = 0");
  if (claimed_period == 0) throw std::invalid_argument("verify_period: period must be >= 1");
  PeriodCertificate cert;
  cert.m = m;
  cert.x = x;
  cert.claimed_period = claimed_period;
  cert.window_end = window_end;
  BinomSequence seq(x, m);
  // The n >= x part of the window first, then the convention-zero prefix, so
  // a reported counterexample points into the genuine sequence when one
  // exists there.
  auto passes = [&](u64 k, std::optional<u64>* bad_n) {
    for (u64 n = std::min(x, window_end + 1); n <= window_end; ++n) {
      if (seq.at(n + k) != seq.at(n)) {
        if (bad_n) *bad_n = n;
        return false;
      }
    }
    for (u64 n = 0; n < std::min(x, window_end + 1); ++n) {
      if (seq.at(n + k) != seq.at(n)) {
        if (bad_n) *bad_n = n;
        return false;
      }
    }
    return true;
  };
  cert.periodic = passes(claimed_period, &cert.counterexample_n);
  cert.minimal = cert.periodic;
  if (cert.periodic) {
    for (u64 k = 1; k < claimed_period; ++k) {
      if (passes(k, nullptr)) {
        cert.minimal = false;
        cert.smaller_period_found = k;
        break;
      }
    }
  }
  return cert;
}

CheckReport bounds_check(u64 m) {
  if (m < 2) throw std::invalid_argument("bounds_check: requires m >= 2");
  CheckReport report;
  report.name = "bounds";
  PeriodResult pr = period_length_self(m);
  u64 k = pr.exponents.size();
  u64 lower = checked_mul(m, m);
  u64 upper = checked_pow(m, k + 1);
  report.parameters = {{"m", m}, {"k", k}, {"length", pr.length}, {"lower", lower}, {"upper", upper}};
  report.passed = lower <= pr.length && pr.length <= upper && pr.length % lower == 0;
  if (report.passed) {
    report.details = "m^2 <= l(m) <= m^(k+1) and m^2 | l(m)";
  } else {
    report.counterexample = {{"m", m}, {"length", pr.length}};
    report.details = "period bound violated";
  }
  return report;
}

}  // namespace binomod
