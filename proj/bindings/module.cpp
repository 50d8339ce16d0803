#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "binomod/arith.hpp"
#include "binomod/binom.hpp"
#include "binomod/identities.hpp"
#include "binomod/period.hpp"

namespace py = pybind11;
using namespace binomod;

PYBIND11_MODULE(_core, m) {
  m.doc() = "binomial coefficients mod m and minimal periods of C(n,x) mod m";

  py::class_<PrimePower>(m, "PrimePower")
      .def(py::init<>())
      .def(py::init([](u64 p, u64 b) {
             return PrimePower{p, b, checked_pow(p, b)};
           }),
           py::arg("p"), py::arg("b"))
      .def_readonly("p", &PrimePower::p)
      .def_readonly("b", &PrimePower::b)
      .def_readonly("modulus", &PrimePower::modulus)
      .def("__repr__", [](const PrimePower& pp) {
        return "PrimePower(p=" + std::to_string(pp.p) + ", b=" + std::to_string(pp.b) + ")";
      });

  py::class_<Factorization>(m, "Factorization")
      .def_readonly("value", &Factorization::value)
      .def_readonly("factors", &Factorization::factors)
      .def("__repr__", [](const Factorization& f) {
        std::string s = "Factorization(" + std::to_string(f.value) + " = ";
        for (size_t i = 0; i < f.factors.size(); ++i) {
          if (i) s += " * ";
          s += std::to_string(f.factors[i].p) + "^" + std::to_string(f.factors[i].b);
        }
        return s + ")";
      });

  py::class_<PeriodExponent>(m, "PeriodExponent")
      .def_readonly("p", &PeriodExponent::p)
      .def_readonly("b", &PeriodExponent::b)
      .def_readonly("e", &PeriodExponent::e);

  py::class_<PeriodResult>(m, "PeriodResult")
      .def_readonly("m", &PeriodResult::m)
      .def_readonly("x", &PeriodResult::x)
      .def_readonly("length", &PeriodResult::length)
      .def_readonly("exponents", &PeriodResult::exponents);

  py::class_<PeriodCertificate>(m, "PeriodCertificate")
      .def_readonly("m", &PeriodCertificate::m)
      .def_readonly("x", &PeriodCertificate::x)
      .def_readonly("claimed_period", &PeriodCertificate::claimed_period)
      .def_readonly("window_end", &PeriodCertificate::window_end)
      .def_readonly("periodic", &PeriodCertificate::periodic)
      .def_readonly("minimal", &PeriodCertificate::minimal)
      .def_readonly("counterexample_n", &PeriodCertificate::counterexample_n)
      .def_readonly("smaller_period_found", &PeriodCertificate::smaller_period_found);

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("name", &CheckReport::name)
      .def_readonly("parameters", &CheckReport::parameters)
      .def_readonly("passed", &CheckReport::passed)
      .def_readonly("counterexample", &CheckReport::counterexample)
      .def_readonly("details", &CheckReport::details);

  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("factorize", &factorize, py::arg("m"));
  m.def("ilog", &ilog, py::arg("p"), py::arg("x"));
  m.def("ord", &ord, py::arg("p"), py::arg("n"));
  m.def("theta", &theta, py::arg("p"), py::arg("m"));
  m.def("carries", &carries, py::arg("p"), py::arg("a"), py::arg("b"));
  m.def(
      "crt_combine",
      [](const std::vector<std::pair<u64, u64>>& residues) { return crt_combine(residues); },
      py::arg("residues"));
  m.def("totient", &totient, py::arg("factorization"));

  m.def("binom_exact_mod", &binom_exact_mod, py::arg("n"), py::arg("x"), py::arg("m"));
  m.def("binom_mod_prime", &binom_mod_prime, py::arg("n"), py::arg("x"), py::arg("p"));
  m.def("binom_power_column", &binom_power_column, py::arg("n"), py::arg("k"), py::arg("p"));
  m.def("binom_mod_prime_power", &binom_mod_prime_power, py::arg("n"), py::arg("x"), py::arg("pp"));
  m.def(
      "binom_mod", [](u64 n, u64 x, u64 mod) { return binom_mod({n, x, mod}); }, py::arg("n"),
      py::arg("x"), py::arg("m"));

  m.def("period_length", &period_length, py::arg("m"), py::arg("x"));
  m.def("period_length_self", &period_length_self, py::arg("m"));
  m.def("step_period", &step_period, py::arg("m"), py::arg("x"));
  m.def("minimal_period_bruteforce", &minimal_period_bruteforce, py::arg("m"), py::arg("x"),
        py::arg("window_end") = std::nullopt);
  m.def("verify_period", &verify_period, py::arg("m"), py::arg("x"), py::arg("claimed_period"),
        py::arg("window_end"));
  m.def("bounds_check", &bounds_check, py::arg("m"));

  m.def("hockey_stick_check", &hockey_stick_check, py::arg("x"), py::arg("n"));
  m.def("block_sum_check", &block_sum_check, py::arg("m"), py::arg("x"), py::arg("n"), py::arg("k"));
  m.def("prime_counterexample", &prime_counterexample, py::arg("p"), py::arg("search_limit"));
  m.def("default_prime_search_limit", &default_prime_search_limit, py::arg("p"));
  m.def("is_prime_binomial", &is_prime_binomial, py::arg("p"), py::arg("search_limit"));
  m.def("central_identity_check", &central_identity_check, py::arg("p"), py::arg("c"));
  m.def("special_period_formula", &special_period_formula, py::arg("p"), py::arg("c"), py::arg("b"),
        py::arg("other_factors") = std::vector<PrimePower>{});
}
