#include "binomod/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace binomod {

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (u64 d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Factorization factorize(u64 m) {
  if (m == 0) throw std::invalid_argument("factorize: m = 0 has no factorization");
  Factorization f;
  f.value = m;
  auto push = [&](u64 p, u64& rest) {
    u64 b = 0;
    while (rest % p == 0) {
      rest /= p;
      ++b;
    }
    if (b > 0) f.factors.push_back({p, b, checked_pow(p, b)});
  };
  u64 rest = m;
  push(2, rest);
  push(3, rest);
  for (u64 d = 5; d <= rest / d; d += 6) {
    push(d, rest);
    push(d + 2, rest);
  }
  if (rest > 1) f.factors.push_back({rest, 1, rest});
  return f;
}

u64 ilog(u64 p, u64 x) {
  if (p < 2) throw std::invalid_argument("ilog: base must be >= 2");
  if (x == 0) throw std::invalid_argument("ilog: log of 0 undefined");
  u64 e = 0;
  u64 power = 1;
  while (power <= x / p) {
    power *= p;
    ++e;
  }
  return e;
}

u64 ord(u64 p, u64 n) {
  if (p < 2) throw std::invalid_argument("ord: base must be >= 2");
  if (n == 0) throw std::invalid_argument("ord: ord of 0 is unbounded");
  u64 k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

u64 theta(u64 p, u64 m) {
  if (p < 2) throw std::invalid_argument("theta: base must be >= 2");
  u64 sum = 0;
  for (u64 q = p; q <= m; ) {
    sum += m / q;
    if (q > m / p) break;  // next power exceeds m
    q *= p;
  }
  return sum;
}

u64 carries(u64 p, u64 a, u64 b) {
  if (p < 2) throw std::invalid_argument("carries: base must be >= 2");
  u64 count = 0;
  u64 carry = 0;
  while (a > 0 || b > 0 || carry > 0) {
    u64 s = a % p + b % p + carry;
    carry = s >= p ? 1 : 0;
    count += carry;
    a /= p;
    b /= p;
  }
  return count;
}

u64 crt_combine(std::span<const std::pair<u64, u64>> residues) {
  if (residues.empty()) throw std::invalid_argument("crt_combine: empty input");
  u64 r = 0, mod = 1;
  for (auto [ri, mi] : residues) {
    if (mi == 0) throw std::invalid_argument("crt_combine: zero modulus");
    if (ri >= mi) throw std::invalid_argument("crt_combine: residue not reduced");
    if (std::gcd(mod, mi) != 1) throw std::invalid_argument("crt_combine: moduli not coprime");
    // r + mod * t = ri (mod mi)
    u64 t = mul_mod((ri + mi - r % mi) % mi, inv_mod(mod % mi, mi), mi);
    r += checked_mul(mod, t);
    mod = checked_mul(mod, mi);
  }
  return r;
}

u64 totient(const Factorization& f) {
  u64 t = 1;
  for (const auto& pp : f.factors) t = checked_mul(t, pp.modulus / pp.p * (pp.p - 1));
  return t;
}

u64 checked_pow(u64 p, u64 e) {
  u64 r = 1;
  for (u64 i = 0; i < e; ++i) r = checked_mul(r, p);
  return r;
}

u64 checked_mul(u64 a, u64 b) {
  u128 r = static_cast<u128>(a) * b;
  if (r > ~static_cast<u64>(0)) throw std::overflow_error("integer overflow in multiplication");
  return static_cast<u64>(r);
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  std::int64_t t0 = 0, t1 = 1;
  u64 r0 = m, r1 = a % m;
  while (r1 != 0) {
    u64 q = r0 / r1;
    t0 = std::exchange(t1, t0 - static_cast<std::int64_t>(q) * t1);
    r0 = std::exchange(r1, r0 - q * r1);
  }
  if (r0 != 1) throw std::invalid_argument("inv_mod: not invertible");
  return t0 < 0 ? static_cast<u64>(t0 + static_cast<std::int64_t>(m)) : static_cast<u64>(t0);
}

}  // namespace binomod
