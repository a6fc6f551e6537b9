#pragma once

#include <cstdint>
#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace whsg {

enum class Comparison { at_most, greater_than, within };

struct Check {
  std::string id;
  std::string description;
  std::string paper_ref;  // claim identifier listed in docs/claims.md
  nlohmann::json measured;
  Comparison comparison = Comparison::at_most;
  double threshold = 0.0;  // upper bound, lower bound, or range low end
  double upper = 0.0;      // range high end for Comparison::within
  bool pass = false;
};

/// Parameter/value series emitted as two-column CSV.
struct Curve {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct ExperimentReport {
  std::string suite;
  nlohmann::json environment;
  std::vector<Check> checks;
  nlohmann::json artifacts = nlohmann::json::object();
  std::vector<Curve> curves;
  bool pass = false;
};

struct SuiteConfig {
  std::string suite;
  std::optional<double> half_width;
  std::optional<std::size_t> grid_size;
  /// Threshold overrides keyed by check id; the key "all" applies to every
  /// upper-bound check without its own entry.
  std::map<std::string, double> tolerances;
  std::uint64_t seed = 1;
  int max_moment = 4;
  double epsilon = 1e-2;
  std::string out;
  std::string emit_csv;
};

const std::vector<std::string>& suite_names();

/// Throws ConfigError for unknown suites or invalid parameters.
void validate(const SuiteConfig& config);

/// Runs one suite.  Module errors raised inside a check fail that check and
/// are recorded in its measured value.
ExperimentReport run_suite(const SuiteConfig& config);

struct RunSummary {
  std::vector<ExperimentReport> reports;
  bool pass = true;
};

/// Runs the suites concurrently; reports keep the input order.
RunSummary run_all(const std::vector<SuiteConfig>& configs);

/// One config per known suite, all sharing `base` apart from the suite id.
std::vector<SuiteConfig> default_manifest(const SuiteConfig& base = {});

nlohmann::json to_json(const Check& check);
nlohmann::json to_json(const ExperimentReport& report);
nlohmann::json to_json(const RunSummary& summary);

/// Reads the SuiteConfig fields present in `j` on top of `base`.
SuiteConfig suite_config_from_json(const nlohmann::json& j, SuiteConfig base = {});

/// Writes <dir>/<suite>-<curve>.csv for every curve; returns the paths.
std::vector<std::string> write_curves(const ExperimentReport& report, const std::string& dir);

}  // namespace whsg
