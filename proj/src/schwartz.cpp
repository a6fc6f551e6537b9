#include "whsg/schwartz.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>

#include "whsg/errors.hpp"
#include "whsg/heisenberg.hpp"
#include "whsg/transforms.hpp"

namespace whsg {

namespace {

double seminorm_sq(const SampledFunction& f, int n) {
  if (n == 0) {
    const double v = norm(f);
    return v * v;
  }
  return seminorm_sq(generator_apply(GeneratorId::M, f), n - 1) +
         seminorm_sq(generator_apply(GeneratorId::D, f), n - 1) + seminorm_sq(f, n - 1);
}

}  // namespace

double seminorm_iter(const SampledFunction& f, int n, const SeminormConfig& config) {
  if (n < 0) throw ConfigError("seminorm order must be non-negative");
  if (config.max_order > kSeminormHardCap) {
    throw CapabilityError("seminorm order cap is " + std::to_string(kSeminormHardCap));
  }
  if (n > config.max_order) {
    throw CapabilityError("seminorm order " + std::to_string(n) + " exceeds the configured maximum " +
                          std::to_string(config.max_order));
  }
  return std::sqrt(seminorm_sq(f, n));
}

double seminorm_sup(const TestFunction& f, int m, int n) {
  if (m < 0) throw ConfigError("weight power must be non-negative");
  const TestFunction d = f.derivative(n);
  auto supp = d.support();
  if (supp.empty()) return 0.0;

  // Gaussian leaves have unbounded support; scan a window where they are not negligible.
  std::vector<std::pair<double, double>> windows;
  for (const auto& iv : supp) {
    double lo = static_cast<double>(iv.lo);
    double hi = static_cast<double>(iv.hi);
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
      const double reach = 60.0 + 10.0 * m;
      lo = std::isfinite(lo) ? lo : -reach;
      hi = std::isfinite(hi) ? hi : reach;
    }
    windows.emplace_back(lo, hi);
  }

  auto value = [&](double x) {
    return std::pow(std::fabs(x), m) * std::abs(d.evaluate(x));
  };
  double best = 0.0;
  constexpr int kSamples = 20000;
  for (auto [lo, hi] : windows) {
    const double step = (hi - lo) / kSamples;
    int arg = 0;
    double local = -1.0;
    for (int i = 0; i <= kSamples; ++i) {
      const double v = value(lo + i * step);
      if (v > local) {
        local = v;
        arg = i;
      }
    }
    const double a = lo + std::max(arg - 1, 0) * step;
    const double b = lo + std::min(arg + 1, kSamples) * step;
    const auto refined = boost::math::tools::brent_find_minima([&](double x) { return -value(x); }, a, b,
                                                               std::numeric_limits<double>::digits / 2);
    best = std::max({best, local, -refined.second});
  }
  return best;
}

cplx moment(const SampledFunction& f, int n) {
  if (n < 0) throw ConfigError("moment order must be non-negative");
  return integrate(multiply_by(f, [n](double x) { return cplx(std::pow(x, n), 0.0); }));
}

double moment_defect(const SampledFunction& f, int n) {
  if (n < 0) throw ConfigError("moment order must be non-negative");
  double mass = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) mass += std::pow(std::fabs(f.grid().point(j)), n) * std::abs(f[j]);
  mass *= f.grid().spacing();
  if (mass == 0.0) return 0.0;
  return std::abs(moment(f, n)) / mass;
}

cplx fourier_derivative_at_zero(const SampledFunction& f, int n) {
  const SampledFunction d = spectral_derivative(fourier(f), n);
  return d[d.grid().zero_index()];
}

double n_defect(const SampledFunction& f, int K) {
  if (K < 0) throw ConfigError("moment order must be non-negative");
  if (K > kMaxDefectOrder) {
    throw CapabilityError("moment defects are limited to order " + std::to_string(kMaxDefectOrder));
  }
  double worst = 0.0;
  for (int n = 0; n <= K; ++n) worst = std::max(worst, moment_defect(f, n));
  return worst;
}

DefectRecord class_defects(const SampledFunction& f, int K) {
  DefectRecord r;
  r.order = K;
  r.n_defect = n_defect(f, K);
  r.m_defect = n_defect(inverse_fourier(f), K);
  r.hardy_plus = hardy_defect(f, Side::plus);
  r.hardy_minus = hardy_defect(f, Side::minus);
  const double total = norm(f);
  if (total > 0.0) {
    r.support_plus = norm(restrict_halfline(f, Side::plus)) / total;
    r.support_minus = norm(restrict_halfline(f, Side::minus)) / total;
  }
  return r;
}

double psi_norm(const SampledFunction& g, const SampledFunction& h, int n, const SeminormConfig& config) {
  double total = 0.0;
  for (const auto* u : {&g, &h}) {
    for (Side side : {Side::plus, Side::minus}) {
      const double s = seminorm_iter(proj_hardy(*u, side), n, config);
      total += s * s;
    }
  }
  return std::sqrt(total);
}

}  // namespace whsg
