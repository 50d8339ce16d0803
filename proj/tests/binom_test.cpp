#include <doctest.h>

#include <random>
#include <stdexcept>

#include "binomod/binom.hpp"

using namespace binomod;

namespace {

PrimePower pp(u64 p, u64 b) { return {p, b, checked_pow(p, b)}; }

// ord_p of exact C(n,x) accumulated over the multiplicative formula,
// independent of both carries() and the evaluators.
u64 ord_of_binom(u64 p, u64 n, u64 x) {
  std::int64_t v = 0;
  for (u64 i = 1; i <= x; ++i) {
    u64 t = n - x + i;
    while (t % p == 0) {
      t /= p;
      ++v;
    }
    t = i;
    while (t % p == 0) {
      t /= p;
      --v;
    }
  }
  REQUIRE(v >= 0);
  return static_cast<u64>(v);
}

}  // namespace

TEST_CASE("binom_exact_mod known values") {
  CHECK(binom_exact_mod(5, 2, 7) == 3);    // C(5,2) = 10
  CHECK(binom_exact_mod(4, 7, 5) == 0);    // n < x convention
  CHECK(binom_exact_mod(10, 5, 10) == 2);  // C(10,5) = 252
  CHECK(binom_exact_mod(0, 0, 5) == 1);
  CHECK(binom_exact_mod(7, 0, 9) == 1);
  CHECK_THROWS_AS(binom_exact_mod(5, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(binom_exact_mod(oracle_bound() + 1, 2, 7), std::invalid_argument);
}

TEST_CASE("binom_mod_prime agrees with the oracle") {
  CHECK(binom_mod_prime(7, 2, 2) == binom_exact_mod(7, 2, 2));
  CHECK(binom_mod_prime(7, 2, 2) == 1);  // C(7,2) = 21
  CHECK(binom_mod_prime(10, 3, 3) == 0);  // C(10,3) = 120
  for (u64 n = 0; n <= 50; ++n) {
    CHECK(binom_mod_prime(n, 0, 7) == 1);
    for (u64 x = 0; x <= n; ++x) {
      for (u64 p : {2, 3, 5, 7, 13}) {
        CHECK(binom_mod_prime(n, x, p) == binom_exact_mod(n, x, p));
      }
    }
  }
}

TEST_CASE("binom_power_column known values") {
  CHECK(binom_power_column(7, 1, 2) == 1);   // floor(7/2) = 3
  CHECK(binom_power_column(9, 2, 3) == 1);   // C(9,9) = 1
  CHECK(binom_power_column(14, 1, 3) == 1);  // floor(14/3) = 4
  CHECK(binom_power_column(5, 3, 2) == 0);   // p^k > n
}

TEST_CASE("binom_power_column equals the Lucas evaluation of C(n, p^k)") {
  std::mt19937_64 rng(7);
  for (u64 p : {2, 3, 5, 7}) {
    for (u64 k = 1; checked_pow(p, k) <= 10000; ++k) {
      for (int trial = 0; trial < 50; ++trial) {
        u64 n = rng() % 1'000'000'000;
        CHECK(binom_power_column(n, k, p) == binom_mod_prime(n, checked_pow(p, k), p));
      }
    }
  }
}

TEST_CASE("binom_mod_prime_power known values") {
  CHECK(binom_mod_prime_power(10, 5, pp(2, 3)) == 4);  // 252 mod 8
  CHECK(binom_mod_prime_power(6, 3, pp(2, 2)) == 0);   // carries(2,3,3) = 2
  for (u64 x : {0ULL, 1ULL, 9ULL, 100ULL}) {
    CHECK(binom_mod_prime_power(x, x, pp(3, 2)) == 1);
  }
  CHECK(binom_mod_prime_power(3, 7, pp(5, 1)) == 0);  // n < x
  CHECK_THROWS_AS(binom_mod_prime_power(5, 2, PrimePower{2, 3, 9}), std::invalid_argument);
  CHECK_THROWS_AS(binom_mod_prime_power(5, 2, PrimePower{4, 1, 4}), std::invalid_argument);
}

TEST_CASE("binom_mod_prime_power agrees with the oracle") {
  for (const auto& m : {pp(2, 3), pp(2, 5), pp(3, 2), pp(5, 2), pp(7, 1), pp(13, 2)}) {
    for (u64 n = 0; n <= 150; ++n) {
      for (u64 x = 0; x <= n; ++x) {
        CHECK(binom_mod_prime_power(n, x, m) == binom_exact_mod(n, x, m.modulus));
      }
    }
  }
}

TEST_CASE("binom_mod_prime_power with b=1 matches Lucas at large n") {
  std::mt19937_64 rng(11);
  for (u64 p : {2, 3, 7, 101}) {
    for (int trial = 0; trial < 200; ++trial) {
      u64 n = rng() % 1'000'000'000'000ULL;
      u64 x = rng() % (n + 1);
      CHECK(binom_mod_prime_power(n, x, pp(p, 1)) == binom_mod_prime(n, x, p));
    }
  }
}

TEST_CASE("binom_mod known values") {
  CHECK(binom_mod({10, 5, 12}) == 0);  // 252 mod 12
  CHECK(binom_mod({10, 5, 10}) == binom_exact_mod(10, 5, 10));
  CHECK(binom_mod({123456, 0, 97}) == 1);
  CHECK(binom_mod({10, 5, 1}) == 0);
  CHECK_THROWS_AS(binom_mod({10, 5, 0}), std::invalid_argument);
}

TEST_CASE("binom_mod agrees with the oracle on random queries") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 2000; ++trial) {
    u64 n = rng() % 2001;
    u64 x = rng() % (n + 1);
    u64 m = 2 + rng() % 99;
    CHECK(binom_mod({n, x, m}) == binom_exact_mod(n, x, m));
  }
}

TEST_CASE("binom_mod symmetry and Pascal step") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    u64 n = rng() % 2001;
    u64 x = rng() % (n + 1);
    u64 m = 1 + rng() % 100;
    CHECK(binom_mod({n, x, m}) == binom_mod({n, n - x, m}));
    u64 lhs = binom_mod({n + 1, x + 1, m});
    u64 rhs = (binom_mod({n, x, m}) + binom_mod({n, x + 1, m})) % m;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("carries equals the valuation of C(n,x)") {
  for (u64 p : {2, 3, 5}) {
    for (u64 n = 0; n <= 400; n += 7) {
      for (u64 x = 0; x <= n; ++x) {
        CHECK(carries(p, x, n - x) == ord_of_binom(p, n, x));
      }
    }
  }
}

TEST_CASE("sequence generator matches the oracle") {
  BinomSequence seq(5, 12);
  for (u64 n = 0; n <= 300; ++n) {
    CHECK(seq.at(n) == binom_exact_mod(n, 5, 12));
  }
  CHECK(seq.at(10) == binom_exact_mod(10, 5, 12));  // revisiting cached values
}
