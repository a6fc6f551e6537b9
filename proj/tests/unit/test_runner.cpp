#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "whsg/errors.hpp"
#include "whsg/runner.hpp"

using namespace whsg;

namespace {

SuiteConfig config_for(const std::string& suite) {
  SuiteConfig c;
  c.suite = suite;
  return c;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Runner, SuiteNames) {
  const auto& names = suite_names();
  EXPECT_EQ(names.size(), 10u);
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
  const auto manifest = default_manifest();
  ASSERT_EQ(manifest.size(), names.size());
  for (std::size_t i = 0; i < names.size(); ++i) EXPECT_EQ(manifest[i].suite, names[i]);
}

TEST(Runner, ValidationErrors) {
  EXPECT_THROW(validate(config_for("no-such-suite")), ConfigError);
  EXPECT_THROW(run_suite(config_for("no-such-suite")), ConfigError);
  SuiteConfig c = config_for("transforms");
  c.grid_size = 1000;
  EXPECT_THROW(validate(c), ConfigError);
  c.grid_size = 8;
  EXPECT_THROW(validate(c), ConfigError);
  c = config_for("transforms");
  c.half_width = -1;
  EXPECT_THROW(validate(c), ConfigError);
  c = config_for("transforms");
  c.tolerances["fourier-gaussian"] = -1e-3;
  EXPECT_THROW(validate(c), ConfigError);
  c = config_for("appendix-a");
  c.max_moment = 9;
  EXPECT_THROW(validate(c), ConfigError);
  c = config_for("appendix-a");
  c.epsilon = 0;
  EXPECT_THROW(validate(c), ConfigError);
  EXPECT_THROW(run_all({config_for("transforms"), config_for("bogus")}), ConfigError);
}

TEST(Runner, EmptyRunPasses) {
  const RunSummary s = run_all({});
  EXPECT_TRUE(s.pass);
  EXPECT_TRUE(s.reports.empty());
}

TEST(Runner, SuiteReportIsDeterministic) {
  const SuiteConfig c = config_for("group-axioms");
  const auto a = to_json(run_suite(c)).dump();
  const auto b = to_json(run_suite(c)).dump();
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j.at("suite"), "group-axioms");
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_TRUE(j.at("environment").contains("seed"));
  for (const auto& chk : j.at("checks")) {
    for (const char* key : {"id", "description", "paper_ref", "measured", "comparison", "threshold", "pass"}) {
      EXPECT_TRUE(chk.contains(key)) << key;
    }
  }
}

TEST(Runner, SeedChangesRandomDraws) {
  SuiteConfig a = config_for("conjugation");
  SuiteConfig b = a;
  b.seed = 7;
  EXPECT_NE(to_json(run_suite(a)).at("checks").dump(), to_json(run_suite(b)).at("checks").dump());
}

TEST(Runner, ZeroToleranceFailsChecks) {
  SuiteConfig c = config_for("psi-invariance");
  c.tolerances["all"] = 0.0;
  const ExperimentReport r = run_suite(c);
  EXPECT_FALSE(r.pass);
  SuiteConfig one = config_for("transforms");
  one.tolerances["fourier-gaussian"] = 0.0;
  const ExperimentReport t = run_suite(one);
  EXPECT_FALSE(t.pass);
  for (const auto& chk : t.checks) {
    if (chk.id == "fourier-gaussian") {
      EXPECT_FALSE(chk.pass);
    } else {
      EXPECT_TRUE(chk.pass) << chk.id;
    }
  }
}

TEST(Runner, RunAllKeepsOrder) {
  const RunSummary s = run_all({config_for("conjugation"), config_for("group-axioms")});
  ASSERT_EQ(s.reports.size(), 2u);
  EXPECT_EQ(s.reports[0].suite, "conjugation");
  EXPECT_EQ(s.reports[1].suite, "group-axioms");
  EXPECT_TRUE(s.pass);
  const auto j = to_json(s);
  EXPECT_EQ(j.at("suites").size(), 2u);
  EXPECT_EQ(j.at("suites")[0].at("failed"), 0);
}

TEST(Runner, ClaimIdsAreDocumented) {
  const std::string doc = read_file(std::filesystem::path(WHSG_SOURCE_DIR) / "docs" / "claims.md");
  ASSERT_FALSE(doc.empty());
  std::set<std::string> refs;
  for (const auto& name : {"group-axioms", "conjugation", "tilde-space", "paley-wiener"}) {
    for (const auto& chk : run_suite(config_for(name)).checks) refs.insert(chk.paper_ref);
  }
  for (const auto& r : refs) EXPECT_NE(doc.find("`" + r + "`"), std::string::npos) << r;
}

TEST(Runner, ConfigFromJson) {
  const auto j = nlohmann::json::parse(R"({"suite":"norms","grid":{"L":16,"N":2048},"tolerances":{"all":0.5},
                                           "seed":3,"max_moment":2,"epsilon":0.1,"out":"x.json","emit_csv":"d"})");
  const SuiteConfig c = suite_config_from_json(j);
  EXPECT_EQ(c.suite, "norms");
  EXPECT_EQ(c.half_width, 16.0);
  EXPECT_EQ(c.grid_size, 2048u);
  EXPECT_EQ(c.tolerances.at("all"), 0.5);
  EXPECT_EQ(c.seed, 3u);
  EXPECT_EQ(c.max_moment, 2);
  EXPECT_EQ(c.epsilon, 0.1);
  EXPECT_EQ(c.out, "x.json");
  EXPECT_EQ(c.emit_csv, "d");
  SuiteConfig base;
  base.seed = 11;
  EXPECT_EQ(suite_config_from_json(nlohmann::json::parse(R"({"suite":"norms"})"), base).seed, 11u);
  EXPECT_THROW(suite_config_from_json(nlohmann::json::parse(R"({"grid":{"N":"big"}})")), ConfigError);
}

TEST(Runner, CurvesToCsv) {
  ExperimentReport r;
  r.suite = "demo";
  r.curves.push_back({"line", {{0.0, 1.0}, {0.5, 2.25}}});
  const auto dir = std::filesystem::temp_directory_path() / "whsg_curves_test";
  std::filesystem::remove_all(dir);
  const auto paths = write_curves(r, dir.string());
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(std::filesystem::path(paths[0]).filename(), "demo-line.csv");
  std::istringstream in(read_file(paths[0]));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "parameter,value");
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 2), "0,");
  std::filesystem::remove_all(dir);
}
