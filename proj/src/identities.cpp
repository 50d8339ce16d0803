#include "binomod/identities.hpp"

#include <stdexcept>

#include "binomod/binom.hpp"
#include "binomod/period.hpp"

namespace binomod {

namespace {

constexpr u128 kU128Max = ~static_cast<u128>(0);

u128 checked_mul_u128(u128 a, u128 b) {
  if (b != 0 && a > kU128Max / b) throw std::overflow_error("exact binomial overflow");
  return a * b;
}

// Exact C(n,k); the running product stays divisible by i at every step.
u128 binom_exact(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (u64 i = 1; i <= k; ++i) {
    r = checked_mul_u128(r, n - k + i) / i;
  }
  return r;
}

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

}  // namespace

CheckReport hockey_stick_check(u64 x, u64 n) {
  if (n < x + 1) throw std::invalid_argument("hockey_stick_check: requires n >= x+1");
  CheckReport report;
  report.name = "hockey-stick";
  report.parameters = {{"x", x}, {"n", n}};
  u128 lhs = 0;
  for (u64 i = x; i < n; ++i) {
    lhs += binom_exact(i, x);
    if (lhs < binom_exact(i, x)) throw std::overflow_error("hockey_stick_check: sum overflow");
  }
  u128 rhs = binom_exact(n, x + 1);
  report.passed = lhs == rhs;
  if (report.passed) {
    report.details = "sum_{i=x}^{n-1} C(i,x) = C(n,x+1) = " + u128_to_string(rhs);
  } else {
    report.counterexample = {{"x", x}, {"n", n}};
    report.details = "lhs " + u128_to_string(lhs) + " != rhs " + u128_to_string(rhs);
  }
  return report;
}

CheckReport block_sum_check(u64 m, u64 x, u64 n, u64 k) {
  if (m == 0) throw std::invalid_argument("block_sum_check: m = 0");
  if (k == 0) throw std::invalid_argument("block_sum_check: k must be >= 1");
  PeriodCertificate cert = verify_period(m, x, k, x + 2 * k);
  if (!cert.periodic) {
    throw std::invalid_argument("block_sum_check: k is not a period of C(n,x) mod m");
  }
  CheckReport report;
  report.name = "block-sum";
  report.parameters = {{"m", m}, {"x", x}, {"n", n}, {"k", k}};
  BinomSequence seq(x, m);
  u64 sum = 0;
  u64 terms = checked_mul(m, k);
  for (u64 j = n; j < n + terms; ++j) {
    sum = (sum + seq.at(j)) % m;
  }
  report.passed = sum == 0;
  if (report.passed) {
    report.details = "block sum of m*k consecutive terms vanishes mod m";
  } else {
    report.counterexample = {{"m", m}, {"x", x}, {"n", n}, {"k", k}, {"sum", sum}};
    report.details = "block sum is " + std::to_string(sum) + " mod " + std::to_string(m);
  }
  return report;
}

u64 default_prime_search_limit(u64 p) { return checked_mul(checked_mul(p, p), 5); }

std::optional<u64> prime_counterexample(u64 p, u64 search_limit) {
  if (p < 2) throw std::invalid_argument("prime_counterexample: requires p >= 2");
  for (u64 n = p + 2; n <= search_limit; ++n) {
    u64 r = binom_mod({n, p, p});
    if ((r + p - (n / p) % p) % p != 0) return n;
  }
  return std::nullopt;
}

bool is_prime_binomial(u64 p, u64 search_limit) {
  return !prime_counterexample(p, search_limit).has_value();
}

CheckReport central_identity_check(u64 p, u64 c) {
  if (!is_prime(p)) throw std::invalid_argument("central_identity_check: p not prime");
  if (c == 0) throw std::invalid_argument("central_identity_check: requires c >= 1");
  u64 pc = checked_pow(p, c);
  u64 n = checked_mul(pc, 2) - 1;
  CheckReport report;
  report.name = "central-identity";
  report.parameters = {{"p", p}, {"c", c}, {"n", n}};
  u64 value = binom_mod_prime(n, pc, p);
  report.passed = value == 1;
  if (report.passed) {
    report.details = "C(2p^c-1, p^c) = 1 mod p";
  } else {
    report.counterexample = {{"p", p}, {"c", c}, {"value", value}};
    report.details = "C(2p^c-1, p^c) = " + std::to_string(value) + " mod p";
  }
  return report;
}

CheckReport special_period_formula(u64 p, u64 c, u64 b, const std::vector<PrimePower>& other_factors) {
  if (!is_prime(p)) throw std::invalid_argument("special_period_formula: p not prime");
  if (c == 0 || b == 0) throw std::invalid_argument("special_period_formula: requires c, b >= 1");
  if (c < b) throw std::invalid_argument("special_period_formula: requires c >= b");
  u64 pc = checked_pow(p, c);
  u64 rest = 1;  // m_c / p^b
  for (const auto& q : other_factors) {
    if (q.p == p) throw std::invalid_argument("special_period_formula: duplicate base prime");
    if (!is_prime(q.p)) throw std::invalid_argument("special_period_formula: non-prime factor");
    if (q.b == 0 || q.b != ilog(q.p, pc)) {
      throw std::invalid_argument("special_period_formula: factor exponent must be ilog(q, p^c)");
    }
    rest = checked_mul(rest, checked_pow(q.p, q.b));
  }
  u64 mc = checked_mul(checked_pow(p, b), rest);
  // m_c^2 p^{c-b-1} = rest^2 p^{b+c-1}, always an integer.
  u64 expected_low = checked_mul(checked_mul(rest, rest), checked_pow(p, b + c - 1));
  u64 expected_high = checked_mul(expected_low, p);
  u64 actual_low = period_length(mc, pc - 1).length;
  u64 actual_high = period_length(mc, pc).length;
  CheckReport report;
  report.name = "special-period";
  report.parameters = {{"p", p}, {"c", c}, {"b", b}, {"m_c", mc},
                       {"expected_low", expected_low}, {"expected_high", expected_high}};
  report.passed = actual_low == expected_low && actual_high == expected_high;
  if (report.passed) {
    report.details = "l(m_c, p^c-1) = m_c^2 p^(c-b-1) and l(m_c, p^c) = m_c^2 p^(c-b)";
  } else {
    report.counterexample = {{"actual_low", actual_low}, {"actual_high", actual_high}};
    report.details = "closed-form period disagrees with the special-case formula";
  }
  return report;
}

}  // namespace binomod
