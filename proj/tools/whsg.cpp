#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "whsg/errors.hpp"
#include "whsg/runner.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Flags {
  std::string config_path;
  std::string suite;
  std::optional<std::size_t> grid_size;
  std::optional<double> half_width;
  std::vector<std::string> tolerances;
  std::optional<int> max_moment;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string emit_csv;
};

void apply_flags(whsg::SuiteConfig& c, const Flags& f) {
  if (f.grid_size) c.grid_size = f.grid_size;
  if (f.half_width) c.half_width = f.half_width;
  for (const auto& kv : f.tolerances) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw whsg::ConfigError("tolerance must be KEY=VALUE, got '" + kv + "'");
    try {
      std::size_t used = 0;
      const std::string value = kv.substr(eq + 1);
      c.tolerances[kv.substr(0, eq)] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw whsg::ConfigError("tolerance value is not a number in '" + kv + "'");
    }
  }
  if (f.max_moment) c.max_moment = *f.max_moment;
  if (f.epsilon) c.epsilon = *f.epsilon;
  if (f.seed) c.seed = *f.seed;
  if (!f.out.empty()) c.out = f.out;
  if (!f.emit_csv.empty()) c.emit_csv = f.emit_csv;
}

std::vector<whsg::SuiteConfig> build_configs(const Flags& flags) {
  whsg::SuiteConfig base;
  std::vector<whsg::SuiteConfig> configs;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw whsg::ConfigError("cannot read config file '" + flags.config_path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw whsg::ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    base = whsg::suite_config_from_json(j, base);
    if (j.contains("suites")) {
      if (!j.at("suites").is_array()) throw whsg::ConfigError("'suites' must be an array");
      for (const auto& entry : j.at("suites")) {
        configs.push_back(entry.is_string() ? whsg::suite_config_from_json({{"suite", entry}}, base)
                                            : whsg::suite_config_from_json(entry, base));
      }
    }
  }
  if (!flags.suite.empty()) {
    configs.clear();
    base.suite = flags.suite;
  }
  if (configs.empty()) {
    configs = (base.suite.empty() || base.suite == "all") ? whsg::default_manifest(base)
                                                          : std::vector<whsg::SuiteConfig>{base};
  }
  for (auto& c : configs) apply_flags(c, flags);
  return configs;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw whsg::ConfigError("cannot write report to '" + path + "'");
  out << text << '\n';
  if (!out) throw whsg::ConfigError("failed writing report to '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run Weyl-Heisenberg semigroup verification suites"};
  Flags flags;
  app.add_option("--config", flags.config_path, "JSON config file; flags override its values");
  app.add_option("--suite", flags.suite, "Suite id, or 'all' for the default manifest");
  app.add_option("--grid-size", flags.grid_size, "Grid size N (power of two)");
  app.add_option("--half-width", flags.half_width, "Grid half width L");
  app.add_option("--tolerance", flags.tolerances, "Threshold override KEY=VALUE (check id or 'all')");
  app.add_option("--max-moment", flags.max_moment, "Largest annihilated moment order K");
  app.add_option("--epsilon", flags.epsilon, "L2 budget of the moment annihilator");
  app.add_option("--seed", flags.seed, "Random seed");
  app.add_option("--out", flags.out, "Report path ('-' or empty for stdout)");
  app.add_option("--emit-csv", flags.emit_csv, "Directory for CSV curves");
  bool list = false;
  app.add_flag("--list-suites", list, "Print the suite ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (list) {
    for (const auto& s : whsg::suite_names()) std::cout << s << '\n';
    return 0;
  }

  try {
    const auto configs = build_configs(flags);
    const whsg::RunSummary summary = whsg::run_all(configs);
    const std::string out = configs.front().out;
    const bool single = configs.size() == 1 && (flags.suite.empty() ? true : flags.suite != "all");
    emit((single ? whsg::to_json(summary.reports.front()) : whsg::to_json(summary)).dump(2), out);
    for (std::size_t i = 0; i < summary.reports.size(); ++i) {
      if (!configs[i].emit_csv.empty()) whsg::write_curves(summary.reports[i], configs[i].emit_csv);
    }
    for (const auto& r : summary.reports) {
      std::size_t failed = 0;
      for (const auto& c : r.checks) {
        if (!c.pass) {
          ++failed;
          std::cerr << "FAIL " << r.suite << " / " << c.id << ": " << c.measured.dump() << '\n';
        }
      }
      std::cerr << (r.pass ? "pass " : "FAIL ") << r.suite << " (" << r.checks.size() - failed << '/'
                << r.checks.size() << " checks)\n";
    }
    return summary.pass ? 0 : kExitFail;
  } catch (const whsg::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const whsg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
