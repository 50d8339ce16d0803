"""Binomial coefficients mod m and minimal periods of C(n,x) mod m."""

from binomod._core import (
    CheckReport,
    Factorization,
    PeriodCertificate,
    PeriodExponent,
    PeriodResult,
    PrimePower,
    binom_exact_mod,
    binom_mod,
    binom_mod_prime,
    binom_mod_prime_power,
    binom_power_column,
    block_sum_check,
    bounds_check,
    carries,
    central_identity_check,
    crt_combine,
    default_prime_search_limit,
    factorize,
    hockey_stick_check,
    ilog,
    is_prime,
    is_prime_binomial,
    minimal_period_bruteforce,
    ord,
    period_length,
    period_length_self,
    prime_counterexample,
    special_period_formula,
    step_period,
    theta,
    totient,
    verify_period,
)

__all__ = [
    "CheckReport",
    "Factorization",
    "PeriodCertificate",
    "PeriodExponent",
    "PeriodResult",
    "PrimePower",
    "binom_exact_mod",
    "binom_mod",
    "binom_mod_prime",
    "binom_mod_prime_power",
    "binom_power_column",
    "block_sum_check",
    "bounds_check",
    "carries",
    "central_identity_check",
    "crt_combine",
    "default_prime_search_limit",
    "factorize",
    "hockey_stick_check",
    "ilog",
    "is_prime",
    "is_prime_binomial",
    "minimal_period_bruteforce",
    "ord",
    "period_length",
    "period_length_self",
    "prime_counterexample",
    "special_period_formula",
    "step_period",
    "theta",
    "totient",
    "verify_period",
]
