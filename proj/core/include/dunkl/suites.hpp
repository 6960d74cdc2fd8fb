#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dunkl {

struct SuiteCase {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;
  double max_residual = 0.0;
  bool pass = true;
  double seconds = 0.0;
  /// Effective tolerances by key.
  std::map<std::string, double> tolerances;
};

struct SuiteConfig {
  /// Replaces every tolerance of the suite when set.
  std::optional<double> tol;
  std::uint64_t seed = 20240601;
  /// Monte Carlo path count for the markov suite.
  std::size_t paths = 100000;
};

/// Default tolerances, keyed "<suite>.<quantity>".
const std::map<std::string, double>& tolerance_table();

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs a named identity suite. Throws DomainError for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config = {});

/// {"suite", "cases", "max_residual", "pass", "seconds", "tolerances"}.
std::string report_to_json(const SuiteReport& report, int indent = 2);

}  // namespace dunkl
