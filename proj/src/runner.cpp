#include "whsg/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>

#include "whsg/errors.hpp"

namespace whsg {

namespace {

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::at_most:
      return "at_most";
    case Comparison::greater_than:
      return "greater_than";
    case Comparison::within:
      return "within";
  }
  return "at_most";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "group-axioms", "transforms",     "paley-wiener", "generators",          "norms",
      "appendix-a",   "psi-invariance", "tilde-space",  "semigroup-evolution", "conjugation"};
  return names;
}

void validate(const SuiteConfig& config) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), config.suite) == names.end()) {
    throw ConfigError("unknown suite '" + config.suite + "'");
  }
  if (config.half_width && !(*config.half_width > 0.0 && std::isfinite(*config.half_width))) {
    throw ConfigError("half width must be positive and finite");
  }
  if (config.grid_size && (*config.grid_size < 16 || (*config.grid_size & (*config.grid_size - 1)) != 0)) {
    throw ConfigError("grid size must be a power of two >= 16");
  }
  for (const auto& [key, value] : config.tolerances) {
    if (key.empty()) throw ConfigError("empty tolerance key");
    if (!(value >= 0.0) || !std::isfinite(value)) {
      throw ConfigError("tolerance '" + key + "' must be finite and non-negative");
    }
  }
  if (config.max_moment < 0 || config.max_moment > 8) throw ConfigError("max moment must lie in 0..8");
  if (!(config.epsilon > 0.0) || !std::isfinite(config.epsilon)) throw ConfigError("epsilon must be positive");
}

RunSummary run_all(const std::vector<SuiteConfig>& configs) {
  for (const auto& c : configs) validate(c);
  std::vector<std::future<ExperimentReport>> futures;
  futures.reserve(configs.size());
  for (const auto& c : configs) {
    futures.push_back(std::async(std::launch::async, [&c] { return run_suite(c); }));
  }
  RunSummary summary;
  for (auto& f : futures) {
    summary.reports.push_back(f.get());
    summary.pass = summary.pass && summary.reports.back().pass;
  }
  return summary;
}

std::vector<SuiteConfig> default_manifest(const SuiteConfig& base) {
  std::vector<SuiteConfig> out;
  for (const auto& name : suite_names()) {
    SuiteConfig c = base;
    c.suite = name;
    out.push_back(std::move(c));
  }
  return out;
}

nlohmann::json to_json(const Check& check) {
  nlohmann::json j;
  j["id"] = check.id;
  j["description"] = check.description;
  j["paper_ref"] = check.paper_ref;
  j["measured"] = check.measured;
  j["comparison"] = to_string(check.comparison);
  if (check.comparison == Comparison::within) {
    j["threshold"] = nlohmann::json::array({check.threshold, check.upper});
  } else {
    j["threshold"] = check.threshold;
  }
  j["pass"] = check.pass;
  return j;
}

nlohmann::json to_json(const ExperimentReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["environment"] = report.environment;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) j["checks"].push_back(to_json(c));
  j["artifacts"] = report.artifacts;
  j["pass"] = report.pass;
  return j;
}

nlohmann::json to_json(const RunSummary& summary) {
  nlohmann::json j;
  j["pass"] = summary.pass;
  j["suites"] = nlohmann::json::array();
  j["reports"] = nlohmann::json::array();
  for (const auto& r : summary.reports) {
    std::size_t failed = 0;
    for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
    j["suites"].push_back({{"suite", r.suite}, {"pass", r.pass}, {"checks", r.checks.size()}, {"failed", failed}});
    j["reports"].push_back(to_json(r));
  }
  return j;
}

SuiteConfig suite_config_from_json(const nlohmann::json& j, SuiteConfig base) {
  try {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    if (j.contains("suite")) base.suite = j.at("suite").get<std::string>();
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      if (g.contains("L")) base.half_width = g.at("L").get<double>();
      if (g.contains("N")) base.grid_size = g.at("N").get<std::size_t>();
    }
    if (j.contains("tolerances")) {
      for (const auto& [key, value] : j.at("tolerances").items()) base.tolerances[key] = value.get<double>();
    }
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("max_moment")) base.max_moment = j.at("max_moment").get<int>();
    if (j.contains("epsilon")) base.epsilon = j.at("epsilon").get<double>();
    if (j.contains("out")) base.out = j.at("out").get<std::string>();
    if (j.contains("emit_csv")) base.emit_csv = j.at("emit_csv").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  return base;
}

std::vector<std::string> write_curves(const ExperimentReport& report, const std::string& dir) {
  std::vector<std::string> paths;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create CSV directory '" + dir + "': " + ec.message());
  for (const auto& curve : report.curves) {
    const auto path = (std::filesystem::path(dir) / (report.suite + "-" + curve.name + ".csv")).string();
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << "parameter,value\n" << std::setprecision(17);
    for (const auto& [p, v] : curve.points) out << p << ',' << v << '\n';
    paths.push_back(path);
  }
  return paths;
}

}  // namespace whsg
