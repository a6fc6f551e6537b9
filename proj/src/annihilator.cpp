#include "whsg/annihilator.hpp"

#include <cmath>
#include <string>

#include "whsg/errors.hpp"
#include "whsg/testfn_json.hpp"

namespace whsg {

namespace {

Real factorial(int k) {
  Real r = 1;
  for (int i = 2; i <= k; ++i) r *= static_cast<Real>(i);
  return r;
}

void validate(const AnnihilatorConfig& config) {
  if (config.K < 0) throw ConfigError("K must be non-negative");
  if (!(config.epsilon > 0)) throw ConfigError("epsilon must be positive");
  if (!(config.a0 > 1)) throw ConfigError("a0 must exceed 1");
  const auto supp = config.mother.support();
  if (supp.empty()) throw ConfigError("mother function is zero");
  if (supp.front().lo < 0 || supp.back().hi > config.a0) {
    throw ConfigError("mother support must lie in (0, a0)");
  }
  if (config.mother.smoothness() < config.K + 1) {
    throw CapabilityError("mother smoothness " + std::to_string(config.mother.smoothness()) + " is below K+1 = " +
                          std::to_string(config.K + 1) + "; use a bump exponent p >= " +
                          std::to_string(config.K + 2));
  }
}

Real mother_integral(const AnnihilatorConfig& config) {
  const Real I = config.mother.exact_moment(0);
  const Real l1 = l1_moment_mass(config.mother, 0);
  if (!(std::fabs(I) >= 1e-12L * l1)) throw ConfigError("mother function must have a nonzero integral");
  return I;
}

}  // namespace

TestFunction default_mother(int p) {
  const auto bump = TestFunction::compact_bump(0.1L, 0.9L, p);
  return TestFunction::scaled(bump, 1 / bump.exact_moment(0));
}

Real choose_interval(int k, Real a_k, Real lambda, Real I, Real deriv_norm, const AnnihilatorConfig& config) {
  if (lambda == 0) return a_k + 1;
  const Real kk = static_cast<Real>(k);
  const Real log_c = std::log(std::fabs(lambda)) + (kk + 1) * std::log(Real(2)) - std::log(config.epsilon) -
                     std::log(std::fabs(I)) - std::lgamma(kk + 1) + std::log(deriv_norm);
  const Real log_a0 = std::log(config.a0);
  for (int m = 0;; ++m) {
    const Real w = std::ldexp(Real(1), m);
    const Real a = a_k + w;
    if (!std::isfinite(a)) {
      throw CapabilityError("block " + std::to_string(k) + " needs an interval beyond the extended range");
    }
    const Real log_a = std::log(a);
    const bool literal = (kk + 1.5L) * std::log(w) - kk * log_a > log_c + (kk + 1.5L) * log_a0;
    const bool norm_bound = (kk + 0.5L) * std::log(w) - kk * log_a > log_c + (kk + 0.5L) * log_a0;
    if (literal && norm_bound) return a;
  }
}

BlockRecord build_block(int k, Real a_k, Real a_k1, Real lambda, const AnnihilatorConfig& config) {
  if (!(a_k1 > a_k)) throw ConfigError("block interval must have positive width");
  if (k > config.mother.smoothness()) {
    throw CapabilityError("block " + std::to_string(k) + " needs a mother of smoothness " + std::to_string(k) +
                          " (bump exponent p >= " + std::to_string(k + 1) + ")");
  }
  const Real I = config.mother.exact_moment(0);
  const Real w = a_k1 - a_k;
  const Real ratio = config.a0 / w;
  const TestFunction gk = config.mother.derivative(k);

  BlockRecord b;
  b.k = k;
  b.a_k = a_k;
  b.a_k1 = a_k1;
  b.lambda = lambda;
  b.gamma = (k % 2 == 0 ? 1 : -1) * lambda / (factorial(k) * I) * std::pow(ratio, static_cast<Real>(k + 1));
  b.f_k = TestFunction::scaled(TestFunction::translated(TestFunction::dilated(gk, 1 / ratio), a_k), b.gamma);
  b.norm_fk = std::fabs(b.gamma) * std::sqrt(w / config.a0) * std::sqrt(gk.exact_l2_norm_sq());
  b.bound = config.epsilon / (std::ldexp(Real(1), k + 1) * std::pow(a_k1, static_cast<Real>(k)));
  b.moment_closed =
      (k % 2 == 0 ? 1 : -1) * factorial(k) * I * b.gamma * std::pow(w / config.a0, static_cast<Real>(k + 1));
  b.moment_exact = b.f_k.exact_moment(k);
  if (!std::isfinite(b.gamma) || !std::isfinite(b.norm_fk) || !std::isfinite(b.moment_exact)) {
    throw CapabilityError("block " + std::to_string(k) + " overflows the extended range");
  }
  return b;
}

AnnihilatorResult annihilate(const AnnihilatorConfig& config) {
  validate(config);
  AnnihilatorResult r;
  r.mother = config.mother;
  r.I = mother_integral(config);

  std::vector<TestFunction> terms{config.mother};
  Real a_k = config.a0;
  Real norm_sq = 0;
  for (int k = 0; k <= config.K; ++k) {
    Real partial = 0;
    for (const auto& t : terms) partial += t.exact_moment(k);
    const Real lambda = -partial;
    const Real deriv_norm = std::sqrt(config.mother.derivative(k).exact_l2_norm_sq());
    const Real a_k1 = choose_interval(k, a_k, lambda, r.I, deriv_norm, config);
    BlockRecord block = build_block(k, a_k, a_k1, lambda, config);
    terms.push_back(block.f_k);
    norm_sq += block.norm_fk * block.norm_fk;
    r.blocks.push_back(std::move(block));
    a_k = a_k1;
  }
  r.f = TestFunction::sum(terms);
  r.l2_distance = std::sqrt(norm_sq);
  for (int n = 0; n <= config.K; ++n) r.moment_defects.push_back(exact_moment_defect(r.f, n));
  return r;
}

AnnihilatorResult annihilate_negative(const AnnihilatorConfig& config) {
  AnnihilatorResult r = annihilate(config);
  r.f = TestFunction::mirrored(r.f);
  r.mother = TestFunction::mirrored(r.mother);
  for (auto& b : r.blocks) b.f_k = TestFunction::mirrored(b.f_k);
  r.mirrored = true;
  for (int n = 0; n <= config.K; ++n) r.moment_defects[static_cast<std::size_t>(n)] = exact_moment_defect(r.f, n);
  return r;
}

nlohmann::json annihilator_report(const AnnihilatorResult& result, const AnnihilatorConfig& config) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : result.blocks) {
    blocks.push_back({{"k", b.k},
                      {"a_k", real_to_json(b.a_k)},
                      {"a_k1", real_to_json(b.a_k1)},
                      {"gamma_k", real_to_json(b.gamma)},
                      {"lambda_k", real_to_json(b.lambda)},
                      {"norm_fk", real_to_json(b.norm_fk)},
                      {"bound", real_to_json(b.bound)}});
  }
  nlohmann::json defects = nlohmann::json::array();
  for (Real d : result.moment_defects) defects.push_back(real_to_json(d));
  return {{"K", config.K},
          {"epsilon", real_to_json(config.epsilon)},
          {"I", real_to_json(result.I)},
          {"blocks", blocks},
          {"moment_defects", defects},
          {"l2_distance", real_to_json(result.l2_distance)},
          {"mirrored", result.mirrored}};
}

}  // namespace whsg
