#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "dunkl/dunkl_core.hpp"

namespace dunkl::cli {

enum ExitCode : int { kOk = 0, kSuiteFailure = 1, kConfigError = 2, kNumericalError = 3 };

/// Validated settings of one subcommand run.
struct RunConfig {
  std::string command;
  /// Command-specific keys, already checked against the allowed set.
  nlohmann::json params = nlohmann::json::object();
  std::optional<MultiplicityVector> k;
  std::uint64_t seed = 20240601;
  std::optional<double> tol;
  /// Empty writes to stdout.
  std::string out;
  std::string format;
};

/// Builds a RunConfig from a JSON document. Throws DomainError on unknown keys or bad values.
RunConfig parse_config(const std::string& command, const nlohmann::json& doc);

/// FNV-1a of the canonical JSON dump.
std::string config_hash(const RunConfig& config);

/// Runs a parsed configuration; returns the exit code.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dunkl::cli
