#include "binomod/binom.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace binomod {

u64 oracle_bound() {
  static const u64 bound = [] {
    if (const char* env = std::getenv("BINOMOD_ORACLE_BOUND")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<u64>(v);
    }
    return static_cast<u64>(1'000'000);
  }();
  return bound;
}

u64 binom_exact_mod(u64 n, u64 x, u64 m) {
  if (m == 0) throw std::invalid_argument("binom_exact_mod: m = 0");
  if (n > oracle_bound()) throw std::invalid_argument("binom_exact_mod: n exceeds oracle bound");
  if (x > n) return 0;
  x = std::min(x, n - x);
  std::vector<u64> row(x + 1, 0);
  row[0] = 1 % m;
  for (u64 i = 1; i <= n; ++i) {
    for (u64 j = std::min(i, x); j >= 1; --j) {
      row[j] = (row[j] + row[j - 1]) % m;
    }
  }
  return row[x];
}

namespace {

// C(a, b) mod p for digits a, b < p.
u64 digit_binom_mod_p(u64 a, u64 b, u64 p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  u64 num = 1 % p, den = 1 % p;
  for (u64 i = 1; i <= b; ++i) {
    num = mul_mod(num, (a - b + i) % p, p);
    den = mul_mod(den, i % p, p);
  }
  return mul_mod(num, inv_mod(den, p), p);
}

}  // namespace

u64 binom_mod_prime(u64 n, u64 x, u64 p) {
  if (p < 2) throw std::invalid_argument("binom_mod_prime: p must be >= 2");
  if (x > n) return 0;
  u64 res = 1 % p;
  while ((n > 0 || x > 0) && res != 0) {
    res = mul_mod(res, digit_binom_mod_p(n % p, x % p, p), p);
    n /= p;
    x /= p;
  }
  return res;
}

u64 binom_power_column(u64 n, u64 k, u64 p) {
  if (p < 2) throw std::invalid_argument("binom_power_column: p must be >= 2");
  u64 pk = checked_pow(p, k);
  return (n / pk) % p;
}

namespace {

// Products of the p-free residues of one block [1, p^b], the period of the
// p-removed factorial mod p^b.
struct UnitTables {
  u64 p = 0;
  u64 mod = 0;
  std::vector<u64> partial;  // partial[r] = prod_{1<=i<=r, p∤i} i  (mod p^b)
  u64 block = 1;             // partial[mod - 1] extended through i = mod
};

UnitTables build_tables(u64 p, u64 mod) {
  UnitTables t;
  t.p = p;
  t.mod = mod;
  t.partial.resize(mod);
  u64 acc = 1 % mod;
  t.partial[0] = acc;
  for (u64 i = 1; i < mod; ++i) {
    if (i % p != 0) acc = mul_mod(acc, i, mod);
    t.partial[i] = acc;
  }
  t.block = acc;  // i = mod itself is divisible by p
  return t;
}

constexpr u64 kTableLimit = u64{1} << 22;

std::shared_ptr<const UnitTables> get_tables(u64 p, u64 mod) {
  static std::mutex mu;
  static std::map<u64, std::shared_ptr<const UnitTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(mod);
  if (it != cache.end()) return it->second;
  auto t = std::make_shared<const UnitTables>(build_tables(p, mod));
  cache.emplace(mod, t);
  return t;
}

// prod_{1<=i<=r, p∤i} i mod `mod`, computed without a table.
u64 unit_partial_direct(u64 p, u64 mod, u64 r) {
  u64 acc = 1 % mod;
  for (u64 i = 1; i <= r; ++i) {
    if (i % p != 0) acc = mul_mod(acc, i, mod);
  }
  return acc;
}

// p-removed factorial (n!)_p = prod_{1<=i<=n, p∤i} i, reduced mod p^b, using
// the p^b-periodicity of the block product.
u64 unit_factorial(u64 n, u64 p, u64 mod, const UnitTables* tables) {
  u64 res = 1 % mod;
  u64 block = tables ? tables->block : unit_partial_direct(p, mod, mod - 1);
  while (n > 0) {
    res = mul_mod(res, pow_mod(block, n / mod, mod), mod);
    u64 r = n % mod;
    res = mul_mod(res, tables ? tables->partial[r] : unit_partial_direct(p, mod, r), mod);
    n /= p;
  }
  return res;
}

}  // namespace

u64 binom_mod_prime_power(u64 n, u64 x, const PrimePower& pp) {
  if (pp.b == 0 || pp.modulus != checked_pow(pp.p, pp.b)) {
    throw std::invalid_argument("binom_mod_prime_power: modulus != p^b");
  }
  if (pp.modulus > std::numeric_limits<std::uint32_t>::max()) {
    throw std::overflow_error("binom_mod_prime_power: modulus exceeds half the word size");
  }
  if (!is_prime(pp.p)) throw std::invalid_argument("binom_mod_prime_power: p not prime");
  const u64 mod = pp.modulus;
  if (x > n) return 0;
  if (x == 0 || x == n) return 1 % mod;
  u64 v = carries(pp.p, x, n - x);
  if (v >= pp.b) return 0;
  std::shared_ptr<const UnitTables> cached;
  const UnitTables* tables = nullptr;
  if (mod <= kTableLimit) {
    cached = get_tables(pp.p, mod);
    tables = cached.get();
  }
  u64 u = unit_factorial(n, pp.p, mod, tables);
  u = mul_mod(u, inv_mod(unit_factorial(x, pp.p, mod, tables), mod), mod);
  u = mul_mod(u, inv_mod(unit_factorial(n - x, pp.p, mod, tables), mod), mod);
  return mul_mod(u, checked_pow(pp.p, v), mod);
}

u64 binom_mod(const BinomQuery& q) {
  if (q.m == 0) throw std::invalid_argument("binom_mod: m = 0");
  if (q.m == 1) return 0;
  if (q.x > q.n) return 0;
  Factorization f = factorize(q.m);
  std::vector<std::pair<u64, u64>> residues;
  residues.reserve(f.factors.size());
  for (const auto& pp : f.factors) {
    residues.emplace_back(binom_mod_prime_power(q.n, q.x, pp), pp.modulus);
  }
  return crt_combine(residues);
}

BinomSequence::BinomSequence(u64 x, u64 m) : x_(x), m_(m) {
  if (m == 0) throw std::invalid_argument("BinomSequence: m = 0");
  row_.assign(x + 1, 0);
  row_[0] = 1 % m;
  seq_.push_back(row_[x_]);
}

u64 BinomSequence::at(u64 n) {
  if (n + 1 > oracle_bound() * 4) throw std::invalid_argument("BinomSequence: window exceeds oracle bound");
  while (seq_.size() <= n) {
    u64 i = seq_.size();
    for (u64 j = std::min(i, x_); j >= 1; --j) {
      row_[j] = (row_[j] + row_[j - 1]) % m_;
    }
    seq_.push_back(row_[x_]);
  }
  return seq_[n];
}

}  // namespace binomod
