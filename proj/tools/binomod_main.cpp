#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "binomod/arith.hpp"
#include "binomod/binom.hpp"
#include "binomod/identities.hpp"
#include "binomod/period.hpp"

using json = nlohmann::ordered_json;
using namespace binomod;

namespace {

constexpr const char* kVersion = "1.0";

// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 invalid input.
enum ExitCode { kOk = 0, kCheckFailed = 1, kInvalidInput = 2 };

struct Range {
  u64 lo = 0;
  u64 hi = 0;
};

// Inclusive "a..b" ranges on both ends.
Range parse_range(const std::string& s) {
  auto pos = s.find("..");
  Range r;
  try {
    if (pos == std::string::npos) {
      r.lo = r.hi = std::stoull(s);
    } else {
      r.lo = std::stoull(s.substr(0, pos));
      r.hi = std::stoull(s.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range: " + s);
  }
  if (r.lo > r.hi) throw std::invalid_argument("bad range: " + s);
  return r;
}

json named_values(const std::vector<std::pair<std::string, u64>>& values) {
  json j = json::object();
  for (const auto& [k, v] : values) j[k] = v;
  return j;
}

json to_json(const CheckReport& r) {
  json j;
  j["type"] = "check_report";
  j["name"] = r.name;
  j["parameters"] = named_values(r.parameters);
  j["passed"] = r.passed;
  j["counterexample"] = r.counterexample ? named_values(*r.counterexample) : json(nullptr);
  j["details"] = r.details;
  return j;
}

json to_json(const PeriodCertificate& c) {
  json j;
  j["type"] = "period_certificate";
  j["m"] = c.m;
  j["x"] = c.x;
  j["claimed_period"] = c.claimed_period;
  j["window_end"] = c.window_end;
  j["periodic"] = c.periodic;
  j["minimal"] = c.minimal;
  j["counterexample_n"] = c.counterexample_n ? json(*c.counterexample_n) : json(nullptr);
  j["smaller_period_found"] = c.smaller_period_found ? json(*c.smaller_period_found) : json(nullptr);
  return j;
}

json to_json(const PeriodResult& r) {
  json j;
  j["length"] = r.length;
  json exps = json::array();
  for (const auto& e : r.exponents) {
    exps.push_back({{"p", e.p}, {"b", e.b}, {"e", e.e}});
  }
  j["exponents"] = exps;
  return j;
}

struct Options {
  std::string format = "json";
  bool oracle = false;
  bool verify = false;
  bool skip_overflow = false;
  bool timestamps = false;
  std::optional<u64> window;
};

struct Envelope {
  json body;
  bool all_passed = true;

  Envelope(const std::string& command, const json& parameters, const Options& opt) {
    body["command"] = command;
    body["parameters"] = parameters;
    body["result"] = json::object();
    body["certificates"] = json::array();
    body["version"] = kVersion;
    if (opt.timestamps) {
      body["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                              std::chrono::system_clock::now().time_since_epoch())
                              .count();
    }
  }

  void add(const CheckReport& r) {
    body["certificates"].push_back(to_json(r));
    all_passed = all_passed && r.passed;
  }
  void add(const PeriodCertificate& c) {
    body["certificates"].push_back(to_json(c));
    all_passed = all_passed && c.periodic && c.minimal;
  }
};

void print_plain(const json& j, std::ostream& os, int indent = 0) {
  std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      print_plain(value, os, indent + 2);
    } else if (value.is_array()) {
      os << pad << key << ":";
      if (value.empty()) os << " []";
      os << "\n";
      for (const auto& item : value) {
        if (item.is_object() || item.is_array()) {
          print_plain(item, os, indent + 2);
          os << pad << "  --\n";
        } else {
          os << pad << "  " << item.dump() << "\n";
        }
      }
    } else {
      os << pad << key << ": " << value.dump() << "\n";
    }
  }
}

int emit(const Envelope& env, const Options& opt) {
  if (opt.format == "json") {
    std::cout << env.body.dump(2) << "\n";
  } else {
    print_plain(env.body, std::cout);
  }
  return env.all_passed ? kOk : kCheckFailed;
}

int cmd_binom(u64 n, u64 x, u64 m, const Options& opt) {
  Envelope env("binom", {{"n", n}, {"x", x}, {"m", m}}, opt);
  u64 value = binom_mod({n, x, m});
  env.body["result"]["value"] = value;
  if (opt.oracle) {
    if (n <= oracle_bound()) {
      u64 oracle_value = binom_exact_mod(n, x, m);
      env.body["result"]["oracle_value"] = oracle_value;
      env.body["result"]["oracle_agrees"] = oracle_value == value;
      env.all_passed = env.all_passed && oracle_value == value;
    } else {
      env.body["result"]["oracle_value"] = nullptr;
      env.body["result"]["oracle_agrees"] = nullptr;
    }
  }
  return emit(env, opt);
}

int cmd_period(u64 m, std::optional<u64> x_opt, const Options& opt) {
  u64 x = x_opt.value_or(m);
  Envelope env("period", {{"m", m}, {"x", x}}, opt);
  PeriodResult pr = period_length(m, x);
  env.body["result"] = to_json(pr);
  if (opt.verify) {
    u64 window = opt.window.value_or(x + 2 * pr.length);
    u64 bf = minimal_period_bruteforce(m, x, window);
    env.body["result"]["bruteforce_length"] = bf;
    env.add(verify_period(m, x, pr.length, window));
    env.all_passed = env.all_passed && bf == pr.length;
  }
  return emit(env, opt);
}

int cmd_prime(u64 p, const Options& opt) {
  if (p < 2) throw std::invalid_argument("prime: requires p >= 2");
  u64 limit = opt.window.value_or(default_prime_search_limit(p));
  Envelope env("prime", {{"p", p}, {"window_start", p + 2}, {"window_end", limit}}, opt);
  std::optional<u64> cx = prime_counterexample(p, limit);
  bool trial = is_prime(p);
  env.body["result"]["is_prime"] = !cx.has_value();
  env.body["result"]["counterexample_n"] = cx ? json(*cx) : json(nullptr);
  env.body["result"]["trial_division_is_prime"] = trial;
  env.body["result"]["agrees"] = trial == !cx.has_value();
  env.all_passed = trial == !cx.has_value();
  return emit(env, opt);
}

int cmd_sweep(const Range& mr, const Range& xr, const std::vector<std::string>& checks,
              const Options& opt) {
  Envelope env("sweep",
               {{"m_lo", mr.lo}, {"m_hi", mr.hi}, {"x_lo", xr.lo}, {"x_hi", xr.hi}}, opt);
  json names = json::array();
  for (const auto& c : checks) names.push_back(c);
  env.body["parameters"]["checks"] = names;
  for (const auto& check : checks) {
    if (check == "bounds") {
      for (u64 m = std::max<u64>(mr.lo, 2); m <= mr.hi; ++m) env.add(bounds_check(m));
    } else if (check == "period-oracle") {
      for (u64 m = std::max<u64>(mr.lo, 1); m <= mr.hi; ++m) {
        for (u64 x = xr.lo; x <= xr.hi; ++x) {
          CheckReport r;
          r.name = "period-oracle";
          u64 formula = period_length(m, x).length;
          u64 oracle = minimal_period_bruteforce(m, x);
          r.parameters = {{"m", m}, {"x", x}, {"formula", formula}, {"oracle", oracle}};
          r.passed = formula == oracle;
          r.details = r.passed ? "closed form matches brute force" : "mismatch";
          if (!r.passed) r.counterexample = r.parameters;
          env.add(r);
        }
      }
    } else if (check == "step") {
      for (u64 m = std::max<u64>(mr.lo, 2); m <= mr.hi; ++m) {
        for (u64 x = std::max<u64>(xr.lo, 1); x <= xr.hi; ++x) {
          CheckReport r;
          r.name = "step";
          u64 stepped = step_period(m, x);
          u64 direct = period_length(m, x + 1).length;
          r.parameters = {{"m", m}, {"x", x}, {"stepped", stepped}, {"direct", direct}};
          r.passed = stepped == direct;
          r.details = r.passed ? "recurrence matches closed form" : "mismatch";
          if (!r.passed) r.counterexample = r.parameters;
          env.add(r);
        }
      }
    } else if (check == "lemmas") {
      for (u64 m = std::max<u64>(mr.lo, 2); m <= mr.hi; ++m) {
        for (u64 x = xr.lo; x <= xr.hi; ++x) {
          env.add(hockey_stick_check(x, 2 * x + 2));
          env.add(block_sum_check(m, x, x, period_length(m, x).length));
        }
      }
    } else if (check == "theta") {
      for (u64 m = std::max<u64>(mr.lo, 2); m <= mr.hi; ++m) {
        for (const auto& pp : factorize(m).factors) {
          CheckReport r;
          r.name = "theta";
          u64 t = theta(pp.p, m);
          u64 lower = m / pp.p;
          u64 upper = (m / pp.p) * ilog(pp.p, m);
          r.parameters = {{"m", m}, {"p", pp.p}, {"theta", t}, {"lower", lower}, {"upper", upper}};
          r.passed = lower <= t && t <= upper;
          r.details = r.passed ? "floor(m/p) <= theta <= floor(m/p) * ilog(p,m)" : "mismatch";
          if (!r.passed) r.counterexample = r.parameters;
          env.add(r);
        }
      }
    } else {
      throw std::invalid_argument("unknown check: " + check);
    }
  }
  return emit(env, opt);
}

int cmd_table(const Range& mr, const Range& xr, const Options& opt) {
  if (mr.lo < 1) throw std::invalid_argument("table: m must be >= 1");
  std::vector<std::vector<std::optional<u64>>> cells;
  bool overflow = false;
  u64 bad_m = 0, bad_x = 0;
  for (u64 m = mr.lo; m <= mr.hi && !overflow; ++m) {
    std::vector<std::optional<u64>> row;
    for (u64 x = xr.lo; x <= xr.hi; ++x) {
      try {
        row.push_back(period_length(m, x).length);
      } catch (const std::overflow_error&) {
        if (!opt.skip_overflow) {
          overflow = true;
          bad_m = m;
          bad_x = x;
          break;
        }
        row.push_back(std::nullopt);
      }
    }
    cells.push_back(std::move(row));
  }
  if (overflow) {
    std::cerr << "overflow in cell m=" << bad_m << " x=" << bad_x << "\n";
    return kInvalidInput;
  }
  if (opt.format == "csv") {
    std::cout << "m\\x";
    for (u64 x = xr.lo; x <= xr.hi; ++x) std::cout << "," << x;
    std::cout << "\n";
    for (u64 i = 0; i < cells.size(); ++i) {
      std::cout << mr.lo + i;
      for (const auto& cell : cells[i]) {
        std::cout << ",";
        if (cell) std::cout << *cell;
      }
      std::cout << "\n";
    }
    return kOk;
  }
  Envelope env("table", {{"m_lo", mr.lo}, {"m_hi", mr.hi}, {"x_lo", xr.lo}, {"x_hi", xr.hi}}, opt);
  json matrix = json::object();
  for (u64 i = 0; i < cells.size(); ++i) {
    json row = json::object();
    for (u64 j = 0; j < cells[i].size(); ++j) {
      row[std::to_string(xr.lo + j)] = cells[i][j] ? json(*cells[i][j]) : json(nullptr);
    }
    matrix[std::to_string(mr.lo + i)] = row;
  }
  env.body["result"]["periods"] = matrix;
  return emit(env, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binomial coefficients mod m and minimal periods of C(n,x) mod m"};
  app.require_subcommand(1);

  Options opt;
  u64 window_flag = 0;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  app.add_flag("--oracle", opt.oracle, "cross-check against the Pascal oracle");
  app.add_flag("--verify", opt.verify, "verify periods by brute force");
  app.add_flag("--skip-overflow", opt.skip_overflow, "emit null for overflowing cells");
  app.add_flag("--timestamps", opt.timestamps, "include a timestamp in the envelope");
  auto* window_opt = app.add_option("--window", window_flag, "verification window / search limit");

  u64 arg_n = 0, arg_x = 0, arg_m = 1, arg_p = 0;
  std::string m_range = "1..1", x_range;
  std::vector<std::string> checks;
  std::optional<u64> period_x;
  u64 period_x_flag = 0;

  auto* c_binom = app.add_subcommand("binom", "C(n,x) mod m");
  c_binom->add_option("n", arg_n)->required();
  c_binom->add_option("x", arg_x)->required();
  c_binom->add_option("m", arg_m)->required();

  auto* c_period = app.add_subcommand("period", "minimal period of C(n,x) mod m");
  c_period->add_option("m", arg_m)->required();
  auto* x_opt = c_period->add_option("--x", period_x_flag, "column x (default: x = m)");

  auto* c_prime = app.add_subcommand("prime", "binomial primality criterion");
  c_prime->add_option("p", arg_p)->required();

  auto* c_sweep = app.add_subcommand("sweep", "run check families over a grid");
  c_sweep->add_option("--m", m_range, "modulus range a..b")->required();
  c_sweep->add_option("--x", x_range, "column range a..b");
  c_sweep->add_option("--check", checks, "check family")->required();

  auto* c_table = app.add_subcommand("table", "matrix of minimal periods");
  c_table->add_option("--m", m_range, "modulus range a..b")->required();
  c_table->add_option("--x", x_range, "column range a..b")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  if (window_opt->count() > 0) opt.window = window_flag;
  if (x_opt->count() > 0) period_x = period_x_flag;

  try {
    if (c_binom->parsed()) return cmd_binom(arg_n, arg_x, arg_m, opt);
    if (c_period->parsed()) return cmd_period(arg_m, period_x, opt);
    if (c_prime->parsed()) return cmd_prime(arg_p, opt);
    if (c_sweep->parsed()) {
      return cmd_sweep(parse_range(m_range), x_range.empty() ? Range{0, 0} : parse_range(x_range),
                       checks, opt);
    }
    if (c_table->parsed()) return cmd_table(parse_range(m_range), parse_range(x_range), opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}
