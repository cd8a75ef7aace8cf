#pragma once

#include <optional>
#include <string>
#include <vector>

#include "corelattice/core_simplex.hpp"
#include "corelattice/serialize.hpp"

namespace corelattice {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  /// Exploratory checks report findings and never fail a run.
  bool exploratory = false;
  Json detail = Json::object();
  double seconds = 0.0;
};

/// Unset ranges fall back to each suite's own defaults.
struct VerifyOptions {
  std::optional<int> a_max;
  std::optional<int> b_max;
  std::optional<int> n_max;
  std::optional<int> k_max;
  EnumerationOptions enumeration;
};

/// Names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Throws ValidationError for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options);

/// True unless a non-exploratory check failed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace corelattice
