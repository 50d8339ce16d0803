#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace binomod {

// Outcome of one identity or property check. `counterexample` is present
// exactly when the check failed.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::uint64_t>> parameters;
  bool passed = false;
  std::optional<std::vector<std::pair<std::string, std::uint64_t>>> counterexample;
  std::string details;
};

}  // namespace binomod
