#include <doctest.h>

#include <stdexcept>

#include "binomod/binom.hpp"
#include "binomod/identities.hpp"
#include "binomod/period.hpp"

using namespace binomod;

TEST_CASE("hockey_stick_check known values") {
  CHECK(hockey_stick_check(2, 5).passed);  // 1+3+6 = C(5,3)
  CHECK(hockey_stick_check(3, 4).passed);  // C(3,3) = C(4,4) = 1
  CHECK(hockey_stick_check(0, 3).passed);  // 1+1+1 = C(3,1)
  CHECK_THROWS_AS(hockey_stick_check(3, 3), std::invalid_argument);
}

TEST_CASE("hockey stick holds on a grid") {
  for (u64 x = 0; x <= 20; ++x) {
    for (u64 n = x + 1; n <= 80; ++n) {
      CHECK(hockey_stick_check(x, n).passed);
    }
  }
}

TEST_CASE("block_sum_check known values") {
  CHECK(block_sum_check(3, 2, 2, 3).passed);  // sum_{j=2}^{10} C(j,2) = 165
  CHECK(block_sum_check(2, 1, 0, 2).passed);  // 0+1+2+3 = 6
  CHECK(block_sum_check(5, 0, 0, 1).passed);  // five ones
  // k = 2 is not a period of C(n,2) mod 3
  CHECK_THROWS_AS(block_sum_check(3, 2, 2, 2), std::invalid_argument);
}

TEST_CASE("block sums vanish for verified periods") {
  for (u64 m = 2; m <= 10; ++m) {
    for (u64 x = 0; x <= 10; ++x) {
      u64 ell = period_length(m, x).length;
      for (u64 n : {u64(0), u64(1), x, x + 1, x + ell}) {
        CHECK(block_sum_check(m, x, n, ell).passed);
      }
    }
  }
}

TEST_CASE("prime_counterexample known values") {
  CHECK(!prime_counterexample(5, 125).has_value());
  auto c4 = prime_counterexample(4, 80);
  REQUIRE(c4.has_value());
  CHECK(*c4 == 6);  // C(6,4) = 15, 15 - 1 = 14 = 2 mod 4
  auto c9 = prime_counterexample(9, 405);
  REQUIRE(c9.has_value());
  CHECK(*c9 == 12);  // C(12,9) = 220, 220 - 1 = 219 = 3 mod 9
  CHECK_THROWS_AS(prime_counterexample(1, 10), std::invalid_argument);
}

TEST_CASE("is_prime_binomial known values") {
  CHECK(is_prime_binomial(7, default_prime_search_limit(7)));
  CHECK(!is_prime_binomial(4, default_prime_search_limit(4)));
  CHECK(is_prime_binomial(2, default_prime_search_limit(2)));
}

TEST_CASE("binomial criterion agrees with trial division up to 100") {
  for (u64 p = 2; p <= 100; ++p) {
    CHECK(is_prime_binomial(p, default_prime_search_limit(p)) == is_prime(p));
  }
}

TEST_CASE("central_identity_check known values") {
  CHECK(central_identity_check(3, 1).passed);  // C(5,3) = 10
  CHECK(central_identity_check(2, 2).passed);  // C(7,4) = 35
  CHECK(central_identity_check(5, 1).passed);  // C(9,5) = 126
  CHECK_THROWS_AS(central_identity_check(4, 1), std::invalid_argument);
}

TEST_CASE("special_period_formula known values") {
  CHECK(special_period_formula(2, 2, 1, {}).passed);  // l(2,3) = 4
  CHECK(special_period_formula(3, 1, 1, {}).passed);  // l(3,2) = 3 = p^{b+c-1}
  // m_c = 2 * 3 = 6, l(6,7) = 72
  CHECK(special_period_formula(2, 3, 1, {PrimePower{3, 1, 3}}).passed);
}

TEST_CASE("special_period_formula rejects ill-posed inputs") {
  CHECK_THROWS_AS(special_period_formula(4, 2, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(special_period_formula(2, 1, 2, {}), std::invalid_argument);  // c < b
  // wrong exponent on the extra factor: ilog(3, 8) = 1, not 2
  CHECK_THROWS_AS(special_period_formula(2, 3, 1, {PrimePower{3, 2, 9}}), std::invalid_argument);
  // base prime repeated among the extra factors
  CHECK_THROWS_AS(special_period_formula(2, 3, 1, {PrimePower{2, 1, 2}}), std::invalid_argument);
}

TEST_CASE("Pascal-step congruence at a full period") {
  for (u64 m = 2; m <= 10; ++m) {
    auto factors = factorize(m).factors;
    for (u64 x = 1; x <= 10; ++x) {
      u64 k = period_length(m, x).length;
      u64 lhs = (binom_exact_mod(x + k, x + 1, m) + 1) % m;
      u64 rhs = binom_exact_mod(x + k + 1, x + 1, m);
      CHECK(lhs == rhs);
      bool x_at_transition = false;
      for (const auto& pp : factors) {
        u64 t = x + 1;
        while (t % pp.p == 0) t /= pp.p;
        if (t == 1) x_at_transition = true;
      }
      if (!x_at_transition) {
        CHECK(binom_exact_mod(x + k, x + 1, m) == 0);
      }
    }
  }
}
