// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "whsg/annihilator.hpp"
#include "whsg/runner.hpp"

using namespace whsg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Selection {
  std::string suite;
  std::function<bool(const std::string&)> match;
};

std::function<bool(const std::string&)> ids(std::vector<std::string> wanted) {
  return [wanted = std::move(wanted)](const std::string& id) {
    for (const auto& w : wanted) {
      if (id == w || id.rfind(w + " ", 0) == 0) return true;
    }
    return false;
  };
}

std::function<bool(const std::string&)> prefix(std::string p) {
  return [p = std::move(p)](const std::string& id) { return id.rfind(p, 0) == 0; };
}

std::function<bool(const std::string&)> any() {
  return [](const std::string&) { return true; };
}

struct Verdict {
  bool pass = true;
  int matched = 0;
  std::vector<std::string> failed;
};

Verdict evaluate(const std::map<std::string, const ExperimentReport*>& reports, const std::vector<Selection>& sel) {
  Verdict v;
  for (const auto& s : sel) {
    const auto it = reports.find(s.suite);
    if (it == reports.end()) {
      v.pass = false;
      v.failed.push_back(s.suite + " (missing)");
      continue;
    }
    int before = v.matched;
    for (const auto& chk : it->second->checks) {
      if (!s.match(chk.id)) continue;
      ++v.matched;
      if (!chk.pass) {
        v.pass = false;
        v.failed.push_back(s.suite + "/" + chk.id + " measured " + chk.measured.dump());
      }
    }
    if (v.matched == before) {
      v.pass = false;
      v.failed.push_back(s.suite + " (no matching checks)");
    }
  }
  return v;
}

int run_cli(const std::string& args, const std::filesystem::path& out) {
  const std::string cmd = std::string("\"") + WHSG_CLI + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void report(int n, const std::string& title, bool pass, const std::string& detail) {
  std::cout << "criterion " << n << " [" << title << "]: " << (pass ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " - " << detail;
  std::cout << '\n';
}

std::string describe(const Verdict& v) {
  std::string s = std::to_string(v.matched) + " checks";
  for (const auto& f : v.failed) s += "; " + f;
  return s;
}

}  // namespace

int main() {
  const auto t_total = Clock::now();
  const RunSummary summary = run_all(default_manifest());
  std::map<std::string, const ExperimentReport*> reports;
  for (const auto& r : summary.reports) reports[r.suite] = &r;

  bool all = true;
  auto criterion = [&](int n, const std::string& title, const std::vector<Selection>& sel, bool extra = true,
                       const std::string& extra_detail = "") {
    const Verdict v = evaluate(reports, sel);
    const bool ok = v.pass && extra;
    all = all && ok;
    report(n, title, ok, describe(v) + extra_detail);
  };

  criterion(1, "group algebra",
            {{"group-axioms", ids({"associativity", "inverse-identity", "bracket-table", "semigroup-closure"})}});
  criterion(2, "representation",
            {{"group-axioms", ids({"representation-homomorphism", "representation-unitarity"})}});
  criterion(3, "transforms",
            {{"transforms", ids({"hilbert-pv-vs-multiplier", "projector-multipliers", "projector-partition",
                                 "hilbert-translation"})},
             {"paley-wiener", ids({"support-to-hardy"})}});
  criterion(4, "generators",
            {{"generators", prefix("convergence-")}, {"generators", ids({"norm-growth", "commutator"})}});

  // The annihilator construction on its own is timed against the 10 s budget.
  const auto t_a = Clock::now();
  SuiteConfig a;
  a.suite = "appendix-a";
  const ExperimentReport timed = run_suite(a);
  AnnihilatorConfig cfg;
  (void)annihilate(cfg);
  const double a_seconds = seconds_since(t_a);
  std::ostringstream a_detail;
  a_detail << "; runtime " << a_seconds << " s (limit 10 s)";
  criterion(5, "moment annihilation", {{"appendix-a", any()}}, timed.pass && a_seconds < 10.0, a_detail.str());

  criterion(6, "psi invariance",
            {{"psi-invariance", ids({"psi-act-certified", "witness-translation", "witness-modulation", "coincidence"})}});
  criterion(7, "tilde consistency", {{"tilde-space", ids({"tilde-routes", "tilde-norms"})}});
  criterion(8, "semigroups",
            {{"semigroup-evolution", ids({"contraction", "compression", "hardy-step", "hardy-step-backward"})},
             {"conjugation", ids({"conjugation-operator"})}});

  const auto dir = std::filesystem::temp_directory_path() / "whsg_acceptance";
  std::filesystem::create_directories(dir);
  const int run1 = run_cli("", dir / "run1.json");
  const int run2 = run_cli("", dir / "run2.json");
  const std::string out1 = slurp(dir / "run1.json");
  const bool identical = !out1.empty() && out1 == slurp(dir / "run2.json");
  const int failing = run_cli("--suite psi-invariance --tolerance all=0", dir / "fail.json");
  const int bad_config = run_cli("--suite no-such-suite", dir / "bad.json");
  const int bad_grid = run_cli("--suite transforms --grid-size 1000", dir / "bad_grid.json");
  const bool codes = run1 == 0 && run2 == 0 && failing == 1 && bad_config == 2 && bad_grid == 2;
  std::ostringstream h;
  h << "manifest bytes " << out1.size() << (identical ? " identical" : " differ") << "; exit codes pass=" << run1
    << "," << run2 << " check-failure=" << failing << " config-error=" << bad_config << "," << bad_grid;
  const bool harness = identical && codes;
  all = all && harness;
  report(9, "harness", harness, h.str());
  std::filesystem::remove_all(dir);

  const double total = seconds_since(t_total);
  std::cout << "total runtime " << total << " s (limit 120 s)\n";
  if (total >= 120.0) all = false;
  std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << '\n';
  return all ? 0 : 1;
}
