#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace treelab {

struct SuiteOptions {
  std::uint64_t seed = 2026;
  double scale = 1.0; // multiplies randomized case counts (>= 1 case always runs)
};

struct SuiteReport {
  std::string suite;
  std::size_t cases_run = 0;
  std::size_t cases_passed = 0;
  /// Serialized input of the first failing case; empty when everything
  /// passed.  Ready to be written out and re-fed to the CLI.
  std::string first_counterexample;
  double wall_seconds = 0.0;

  bool ok() const { return cases_passed == cases_run; }
};

/// Known suites, in the order `all` runs them.
std::vector<std::string> suite_names();

/// Runs one named suite; `all` aggregates every suite into one report per
/// suite.  Unknown names are rejected with input_error.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});
std::vector<SuiteReport> run_all(const SuiteOptions& opt = {});

nlohmann::json report_to_json(const SuiteReport& r);

} // namespace treelab
