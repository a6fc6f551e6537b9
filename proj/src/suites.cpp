#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "whsg/annihilator.hpp"
#include "whsg/errors.hpp"
#include "whsg/heisenberg.hpp"
#include "whsg/psi.hpp"
#include "whsg/runner.hpp"
#include "whsg/schwartz.hpp"
#include "whsg/testfn.hpp"
#include "whsg/transforms.hpp"

#ifndef WHSG_VERSION
#define WHSG_VERSION "dev"
#endif

namespace whsg {

namespace {

using nlohmann::json;
const cplx kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

class SuiteContext {
 public:
  SuiteContext(const SuiteConfig& config, double half_width, std::size_t size)
      : config_(config),
        grid_(GridSpec::make(config.half_width.value_or(half_width), config.grid_size.value_or(size))),
        rng_(config.seed) {
    report_.suite = config.suite;
    json tolerances = json::object();
    for (const auto& [k, v] : config.tolerances) tolerances[k] = v;
    report_.environment = {{"grid", {{"L", grid_.half_width()}, {"N", grid_.size()}}},
                           {"seed", config.seed},
                           {"tolerances", tolerances},
                           {"max_moment", config.max_moment},
                           {"epsilon", config.epsilon},
                           {"version", WHSG_VERSION}};
  }

  const GridSpec& grid() const { return grid_; }
  const SuiteConfig& config() const { return config_; }

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  void at_most(const std::string& id, const std::string& description, const std::string& ref, double measured,
               double threshold, json detail = nullptr) {
    const double t = tolerance(id, threshold, true);
    add(id, description, ref, measured, detail, Comparison::at_most, t, 0.0, measured <= t);
  }

  void greater(const std::string& id, const std::string& description, const std::string& ref, double measured,
               double threshold, json detail = nullptr) {
    const double t = tolerance(id, threshold, false);
    add(id, description, ref, measured, detail, Comparison::greater_than, t, 0.0, measured > t);
  }

  void within(const std::string& id, const std::string& description, const std::string& ref, double lo_measured,
              double hi_measured, double lo, double hi) {
    Check c;
    c.id = id;
    c.description = description;
    c.paper_ref = ref;
    c.measured = {{"min", lo_measured}, {"max", hi_measured}};
    c.comparison = Comparison::within;
    c.threshold = lo;
    c.upper = hi;
    c.pass = lo_measured >= lo && hi_measured <= hi;
    report_.checks.push_back(std::move(c));
  }

  /// Runs `body`; a library error inside it becomes a failed check named `id`.
  void guard(const std::string& id, const std::string& ref, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      Check c;
      c.id = id;
      c.description = "raised an error";
      c.paper_ref = ref;
      c.measured = {{"error", std::string(e.what())}};
      c.pass = false;
      report_.checks.push_back(std::move(c));
    }
  }

  void artifact(const std::string& key, json value) { report_.artifacts[key] = std::move(value); }
  void curve(const std::string& name, std::vector<std::pair<double, double>> points) {
    report_.curves.push_back({name, std::move(points)});
  }

  ExperimentReport finish() {
    report_.pass = std::all_of(report_.checks.begin(), report_.checks.end(), [](const Check& c) { return c.pass; });
    return std::move(report_);
  }

 private:
  double tolerance(const std::string& id, double fallback, bool upper) const {
    if (auto it = config_.tolerances.find(id); it != config_.tolerances.end()) return it->second;
    if (upper) {
      if (auto it = config_.tolerances.find("all"); it != config_.tolerances.end()) return it->second;
    }
    return fallback;
  }

  void add(const std::string& id, const std::string& description, const std::string& ref, double measured,
           json detail, Comparison cmp, double threshold, double upper, bool pass) {
    Check c;
    c.id = id;
    c.description = description;
    c.paper_ref = ref;
    if (detail.is_null()) {
      c.measured = measured;
    } else {
      c.measured = {{"value", measured}, {"detail", std::move(detail)}};
    }
    c.comparison = cmp;
    c.threshold = threshold;
    c.upper = upper;
    c.pass = pass;
    report_.checks.push_back(std::move(c));
  }

  SuiteConfig config_;
  GridSpec grid_;
  std::mt19937_64 rng_;
  ExperimentReport report_;
};

SampledFunction gaussian(const GridSpec& grid, double center = 0.0, double width = 1.0) {
  return SampledFunction::from(grid, [=](double x) {
    const double u = (x - center) / width;
    return cplx(std::exp(-0.5 * u * u));
  });
}

/// Sum of three modulated Gaussians with random centres, widths and amplitudes.
SampledFunction random_mix(SuiteContext& ctx, const GridSpec& grid) {
  SampledFunction out(grid);
  for (int m = 0; m < 3; ++m) {
    const cplx amp{ctx.uniform(-1, 1), ctx.uniform(-1, 1)};
    const double c = ctx.uniform(-5, 5);
    const double w = ctx.uniform(0.5, 2.0);
    const double omega = ctx.uniform(-3, 3);
    out += SampledFunction::from(grid, [=](double x) {
      const double u = (x - c) / w;
      return amp * std::exp(-0.5 * u * u) * std::polar(1.0, omega * x);
    });
  }
  return out;
}

double rel_diff(const SampledFunction& a, const SampledFunction& b) {
  const double scale = norm(b);
  return scale == 0.0 ? norm(a - b) : norm(a - b) / scale;
}

double max_abs(const SampledFunction& f) {
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double component_diff(const GroupElement& a, const GroupElement& b) {
  return std::max({std::fabs(a.xi1 - b.xi1), std::fabs(a.xi2 - b.xi2), std::fabs(a.xi3 - b.xi3)});
}

// ---------------------------------------------------------------- group-axioms

GroupElement random_in(SuiteContext& ctx, Semigroup s) {
  const double a = ctx.uniform(0, 5);
  const double b = ctx.uniform(0, 5);
  const double c = ctx.uniform(-5, 5);
  switch (s) {
    case Semigroup::S1zero:
      return {a, 0.0, c};
    case Semigroup::S1:
      return {a, ctx.uniform(-5, 5), c};
    case Semigroup::S2zero:
      return {0.0, b, c};
    case Semigroup::S2:
      return {ctx.uniform(-5, 5), b, c};
    case Semigroup::S3:
      return {a, b, c};
    case Semigroup::S4:
      return {a, b, ctx.uniform(0, 1) * (a * b)};
  }
  return {};
}

ExperimentReport suite_group_axioms(const SuiteConfig& config) {
  SuiteContext ctx(config, 32.0, 4096);

  ctx.guard("associativity", "group-law/associativity", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100000; ++i) {
      const GroupElement x{ctx.uniform(-5, 5), ctx.uniform(-5, 5), ctx.uniform(-5, 5)};
      const GroupElement y{ctx.uniform(-5, 5), ctx.uniform(-5, 5), ctx.uniform(-5, 5)};
      const GroupElement z{ctx.uniform(-5, 5), ctx.uniform(-5, 5), ctx.uniform(-5, 5)};
      worst = std::max(worst, component_diff(multiply(multiply(x, y), z), multiply(x, multiply(y, z))));
    }
    ctx.at_most("associativity", "max componentwise |(xy)z - x(yz)| over 1e5 random triples",
                "group-law/associativity", worst, 1e-12);
  });

  ctx.guard("inverse-identity", "group-law/inverse", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100000; ++i) {
      const GroupElement x{ctx.uniform(-5, 5), ctx.uniform(-5, 5), ctx.uniform(-5, 5)};
      worst = std::max(worst, component_diff(multiply(x, inverse(x)), {}));
      worst = std::max(worst, component_diff(multiply(inverse(x), x), {}));
      worst = std::max(worst, component_diff(inverse(inverse(x)), x));
    }
    ctx.at_most("inverse-identity", "max componentwise defect of x x^-1, x^-1 x and (x^-1)^-1 over 1e5 draws",
                "group-law/inverse", worst, 1e-12);
  });

  ctx.guard("product-example", "group-law/associativity", [&] {
    const double d = component_diff(multiply({1, 2, 3}, {4, 5, 6}), {5, 7, 14}) +
                     component_diff(inverse({1, 2, 3}), {-1, -2, -1});
    ctx.at_most("product-example", "(1,2,3)(4,5,6) = (5,7,14) and (1,2,3)^-1 = (-1,-2,-1)", "group-law/inverse", d,
                0.0);
  });

  ctx.guard("bracket-table", "lie-algebra/commutators", [&] {
    const LieElement basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    double defect = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const LieElement b = bracket(basis[i], basis[j]);
        const double expected_c = (i == 0 && j == 1) ? 1.0 : (i == 1 && j == 0) ? -1.0 : 0.0;
        defect += std::fabs(b.a) + std::fabs(b.b) + std::fabs(b.c - expected_c);
      }
    }
    ctx.at_most("bracket-table", "[chi1,chi2] = chi3 with every other basis bracket zero", "lie-algebra/commutators",
                defect, 0.0);
  });

  ctx.guard("semigroup-closure", "semigroups/closure", [&] {
    json detail = json::object();
    double violations = 0.0;
    for (Semigroup s : {Semigroup::S1zero, Semigroup::S1, Semigroup::S2zero, Semigroup::S2, Semigroup::S3,
                        Semigroup::S4}) {
      for (bool inv : {false, true}) {
        const SemigroupId id{s, inv};
        int bad = in_semigroup({}, id) ? 0 : 1;
        for (int i = 0; i < 10000; ++i) {
          GroupElement x = random_in(ctx, s);
          GroupElement y = random_in(ctx, s);
          if (inv) {
            x = inverse(x);
            y = inverse(y);
          }
          if (!in_semigroup(x, id) || !in_semigroup(y, id) || !in_semigroup(multiply(x, y), id)) ++bad;
        }
        detail[to_string(id)] = bad;
        violations += bad;
      }
    }
    ctx.at_most("semigroup-closure", "out-of-set products over 1e4 in-set pairs per semigroup and inverse semigroup",
                "semigroups/closure", violations, 0.0, detail);
  });

  ctx.guard("semigroup-non-closure", "semigroups/non-invertibility", [&] {
    const std::pair<Semigroup, GroupElement> witnesses[] = {
        {Semigroup::S1zero, {1, 0, 5}}, {Semigroup::S1, {1, 2, 0}},   {Semigroup::S2zero, {0, 1, 0}},
        {Semigroup::S2, {3, 1, 0}},     {Semigroup::S3, {1, 1, 0}},   {Semigroup::S4, {1, 1, 0.5}}};
    double bad = 0.0;
    for (const auto& [s, w] : witnesses) {
      if (!in_semigroup(w, {s, false}) || in_semigroup(inverse(w), {s, false})) bad += 1.0;
    }
    if (in_semigroup({1, 2, 3}, {Semigroup::S4, false})) bad += 1.0;
    ctx.at_most("semigroup-non-closure", "stored witnesses in each semigroup whose inverse leaves it",
                "semigroups/non-invertibility", bad, 0.0);
  });

  const GridSpec grid = ctx.grid();
  ctx.guard("representation-homomorphism", "representation/homomorphism", [&] {
    double hom = 0.0;
    double unit = 0.0;
    for (int i = 0; i < 100; ++i) {
      const GroupElement x{ctx.uniform(-3, 3), ctx.uniform(-3, 3), ctx.uniform(-kPi, kPi)};
      const GroupElement y{ctx.uniform(-3, 3), ctx.uniform(-3, 3), ctx.uniform(-kPi, kPi)};
      const SampledFunction f = random_mix(ctx, grid);
      const SampledFunction composed = act(x, act(y, f));
      hom = std::max(hom, rel_diff(composed, act(multiply(x, y), f)));
      unit = std::max(unit, std::fabs(norm(act(x, f)) - norm(f)) / norm(f));
    }
    ctx.at_most("representation-homomorphism", "max ||U(x)U(y)f - U(xy)f|| / ||f|| over 100 random pairs",
                "representation/homomorphism", hom, 1e-12);
    ctx.at_most("representation-unitarity", "max | ||U(x)f|| - ||f|| | / ||f|| over 100 draws",
                "representation/unitarity", unit, 1e-13);
  });

  ctx.guard("central-phase", "representation/homomorphism", [&] {
    const SampledFunction f = gaussian(grid);
    ctx.at_most("central-phase", "max |U(0,0,pi)f + f| relative to max |f|", "representation/homomorphism",
                max_abs(act({0, 0, kPi}, f) + f) / max_abs(f), 1e-15);
  });

  ctx.guard("grid-shift", "representation/homomorphism", [&] {
    const SampledFunction f = random_mix(ctx, grid);
    const SampledFunction g = act({grid.spacing(), 0, 0}, f, ActMode::grid);
    double d = std::abs(g[grid.size() - 1]);
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) d = std::max(d, std::abs(g[j] - f[j + 1]));
    ctx.at_most("grid-shift", "U(dx,0,0) in grid mode is a one-sample shift with zero fill",
                "representation/homomorphism", d, 0.0);
  });

  return ctx.finish();
}

// ------------------------------------------------------------------ transforms

ExperimentReport suite_transforms(const SuiteConfig& config) {
  SuiteContext ctx(config, 32.0, 4096);
  const GridSpec grid = ctx.grid();

  ctx.guard("fourier-gaussian", "fourier/convention", [&] {
    const SampledFunction fh = fourier(gaussian(grid));
    const SampledFunction exact = gaussian(fh.grid());
    ctx.at_most("fourier-gaussian", "max |F[exp(-x^2/2)] - exp(-t^2/2)|", "fourier/convention",
                max_abs(fh - exact), 1e-10);
  });

  ctx.guard("fourier-unitarity", "fourier/unitarity", [&] {
    double unit = 0.0;
    double roundtrip = 0.0;
    for (int i = 0; i < 50; ++i) {
      const SampledFunction f = random_mix(ctx, grid);
      const SampledFunction fh = fourier(f);
      unit = std::max(unit, std::fabs(norm(fh) - norm(f)) / norm(f));
      roundtrip = std::max(roundtrip, rel_diff(inverse_fourier(fh), f));
    }
    ctx.at_most("fourier-unitarity", "max | ||Ff|| - ||f|| | / ||f|| over 50 random band-limited f",
                "fourier/unitarity", unit, 1e-13);
    ctx.at_most("fourier-roundtrip", "max ||F^-1 F f - f|| / ||f|| over 50 draws", "fourier/unitarity", roundtrip,
                1e-13);
  });

  ctx.guard("fourier-modulation", "fourier/convention", [&] {
    const SampledFunction f = random_mix(ctx, grid);
    const int shift = 16;
    const double a = shift * grid.dual().spacing();
    const SampledFunction lhs = fourier(multiply_by(f, [a](double x) { return std::polar(1.0, a * x); }));
    const SampledFunction fh = fourier(f);
    double d = 0.0;
    for (std::size_t k = shift; k < grid.size(); ++k) d = std::max(d, std::abs(lhs[k] - fh[k - shift]));
    ctx.at_most("fourier-modulation", "max |F[e^{iax} f](t) - Ff(t - a)| for a a multiple of the dual spacing",
                "fourier/convention", d / max_abs(fh), 1e-12);
  });

  const SampledFunction lorentz = SampledFunction::from(grid, [](double x) { return cplx(1.0 / (1.0 + x * x)); });
  ctx.guard("hilbert-pv-vs-multiplier", "hilbert/principal-value", [&] {
    const SampledFunction pv = hilbert(lorentz, HilbertMethod::principal_value);
    const SampledFunction mult = hilbert(lorentz, HilbertMethod::multiplier, 32);
    ctx.at_most("hilbert-pv-vs-multiplier", "relative L2 gap between the principal-value rule and the padded multiplier",
                "hilbert/principal-value", rel_diff(pv, mult), 1e-3);
  });

  ctx.guard("hilbert-sign", "hilbert/principal-value", [&] {
    const GridSpec wide = GridSpec::make(128.0, 16384);
    const SampledFunction f = SampledFunction::from(wide, [](double x) { return cplx(1.0 / (1.0 + x * x)); });
    const SampledFunction expected = SampledFunction::from(wide, [](double x) { return cplx(x / (1.0 + x * x)); });
    ctx.at_most("hilbert-sign", "principal-value transform of 1/(1+x^2) against x/(1+x^2) at L=128, relative L2",
                "hilbert/principal-value", rel_diff(hilbert(f, HilbertMethod::principal_value), expected), 1e-3);
  });

  ctx.guard("hilbert-analytic-pair", "hilbert/multiplier", [&] {
    // (x+i)^-6 extends analytically to the upper half plane, so H maps its real part to its imaginary part.
    const GridSpec wide = GridSpec::make(64.0, 2 * grid.size());
    const auto F = [](double x) { return std::pow(cplx(x, 1.0), -6); };
    const SampledFunction f = SampledFunction::from(wide, [&](double x) { return cplx(F(x).real()); });
    const SampledFunction expected = SampledFunction::from(wide, [&](double x) { return cplx(F(x).imag()); });
    ctx.at_most("hilbert-analytic-pair", "multiplier transform of Re (x+i)^-6 against Im (x+i)^-6 at L=64, relative L2",
                "hilbert/multiplier", rel_diff(hilbert(f), expected), 1e-6);
  });

  ctx.guard("hilbert-involution", "hilbert/multiplier", [&] {
    const SampledFunction f = SampledFunction::from(grid, [](double x) { return cplx(x * std::exp(-0.5 * x * x)); });
    ctx.at_most("hilbert-involution", "||H(Hf) + f|| / ||f|| for a mean-zero f", "hilbert/multiplier",
                norm(hilbert(hilbert(f)) + f) / norm(f), 1e-10);
  });

  ctx.guard("hilbert-parity", "hilbert/multiplier", [&] {
    const SampledFunction f =
        SampledFunction::from(grid, [](double x) { return cplx((1 + x * x) * std::exp(-0.5 * x * x)); });
    const SampledFunction hf = hilbert(f);
    double d = 0.0;
    for (std::size_t j = 1; j < grid.size(); ++j) {
      d = std::max({d, std::fabs(hf[j].imag()), std::abs(hf[j] + hf[grid.size() - j])});
    }
    ctx.at_most("hilbert-parity", "Hilbert transform of a real even function: max imaginary part and odd defect",
                "hilbert/multiplier", d / max_abs(hf), 1e-12);
  });

  ctx.guard("projector-partition", "hardy/projections", [&] {
    double multiplier_gap = 0.0;
    const GridSpec dual = grid.dual();
    for (std::size_t k = 0; k < dual.size(); ++k) {
      const double y = dual.point(k);
      const double s = static_cast<double>((y > 0) - (y < 0));
      multiplier_gap = std::max(multiplier_gap, std::fabs(0.5 * (1 + s) + 0.5 * (1 - s) - 1.0));
    }
    ctx.at_most("projector-multipliers", "max |m+(y) + m-(y) - 1| over the dual grid", "hardy/projections",
                multiplier_gap, 0.0);
    const SampledFunction f = random_mix(ctx, grid);
    ctx.at_most("projector-partition", "||P+f + P-f - f|| / ||f|| (rounding of the transform pair)",
                "hardy/projections", rel_diff(proj_hardy(f, Side::plus) + proj_hardy(f, Side::minus), f), 1e-14);
  });

  ctx.guard("projector-idempotence", "hardy/projections", [&] {
    const SampledFunction f = SampledFunction::from(grid, [](double x) {
      return cplx(x * std::exp(-0.5 * x * x), (1 - x * x) * std::exp(-0.5 * x * x));
    });
    const SampledFunction p = proj_hardy(f, Side::plus);
    ctx.at_most("projector-idempotence", "||P+P+f - P+f|| / ||f|| for a mean-zero f", "hardy/projections",
                norm(proj_hardy(p, Side::plus) - p) / norm(f), 1e-13);
  });

  ctx.guard("hilbert-translation", "hilbert/translation", [&] {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const SampledFunction f = random_mix(ctx, grid);
      const double s = ctx.uniform(-3, 3);
      worst = std::max(worst, norm(hilbert(spectral_translate(f, s)) - spectral_translate(hilbert(f), s)) / norm(f));
    }
    ctx.at_most("hilbert-translation", "max ||H T_s f - T_s H f|| / ||f|| over 10 random (f, s)",
                "hilbert/translation", worst, 1e-10);
  });

  return ctx.finish();
}

// ---------------------------------------------------------------- paley-wiener

ExperimentReport suite_paley_wiener(const SuiteConfig& config) {
  SuiteContext ctx(config, 32.0, 8192);
  const GridSpec grid = ctx.grid();

  ctx.guard("support-to-hardy", "paley-wiener/support", [&] {
    const SampledFunction f = sample(TestFunction::compact_bump(1, 2, 4), grid);
    ctx.at_most("support-to-hardy", "||P+ F f|| / ||f|| for a bump supported on (1,2)", "paley-wiener/support",
                norm(proj_hardy(fourier(f), Side::plus)) / norm(f), 1e-6);
    const SampledFunction g = sample(TestFunction::compact_bump(-2, -1, 4), grid);
    ctx.at_most("support-to-hardy-mirror", "||P- F f|| / ||f|| for a bump supported on (-2,-1)",
                "paley-wiener/support", norm(proj_hardy(fourier(g), Side::minus)) / norm(g), 1e-6);
  });

  ctx.guard("hardy-from-spectrum", "paley-wiener/spectrum", [&] {
    const SampledFunction spectrum = sample(TestFunction::compact_bump(0.5, 3, 6), grid.dual());
    const SampledFunction f = inverse_fourier(spectrum);
    ctx.at_most("hardy-from-spectrum", "||P- f|| / ||f|| for f with spectrum on (0.5, 3)", "paley-wiener/spectrum",
                hardy_defect(f, Side::plus), 1e-10);
  });

  ctx.guard("halfline-coincidence", "hardy/halfline-coincidence", [&] {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double b = ctx.uniform(-3, -0.1);
      const double a = b - ctx.uniform(0.5, 3);
      const SampledFunction u = sample(TestFunction::compact_bump(a, b, ctx.integer(4, 12)), grid);
      const SampledFunction d = -kI * proj_hardy(u, Side::plus) - kI * proj_hardy(u, Side::minus);
      worst = std::max(worst, norm(restrict_halfline(d, Side::plus)) / norm(u));
    }
    ctx.at_most("halfline-coincidence", "max ||Q+(-iP+u - iP-u)|| / ||u|| over 10 bumps supported on x < 0",
                "hardy/halfline-coincidence", worst, 1e-8);
  });

  return ctx.finish();
}

// ------------------------------------------------------------------ generators

ExperimentReport suite_generators(const SuiteConfig& config) {
  SuiteContext ctx(config, 32.0, 4096);
  const GridSpec grid = ctx.grid();
  const SampledFunction g = gaussian(grid);

  std::vector<double> ts;
  for (int k = 0; k <= 6; ++k) ts.push_back(0.1 / std::ldexp(1.0, k));

  for (GeneratorId id : {GeneratorId::M, GeneratorId::D, GeneratorId::C}) {
    const std::string name = to_string(id);
    ctx.guard("convergence-" + name, "representation/differentiability", [&] {
      const auto curve = generator_convergence(id, g, ts, 2);
      for (int n = 0; n <= 2; ++n) {
        double lo = INFINITY;
        double hi = -INFINITY;
        int increases = 0;
        std::vector<std::pair<double, double>> pts;
        for (std::size_t i = 0; i < curve.size(); ++i) {
          pts.emplace_back(curve[i].t, curve[i].errors[n]);
          if (i + 1 < curve.size()) {
            const double r = curve[i].errors[n] / curve[i + 1].errors[n];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            if (curve[i + 1].errors[n] > curve[i].errors[n]) ++increases;
          }
        }
        const std::string suffix = name + "-n" + std::to_string(n);
        ctx.within("convergence-ratio-" + suffix, "error ratio per halving of t from 1e-1 down to 1.6e-3",
                   "representation/differentiability", lo, hi, 1.8, 2.2);
        ctx.at_most("convergence-monotone-" + suffix, "number of increases of the error as t decreases",
                    "representation/differentiability", increases, 0.0);
        ctx.curve("convergence-" + suffix, std::move(pts));
      }
      if (id == GeneratorId::C) {
        double worst = 0.0;
        for (const auto& p : curve) {
          const double exact = std::abs(std::polar(1.0, p.t) - 1.0 - kI * p.t) / p.t * norm(g);
          worst = std::max(worst, std::fabs(p.errors[0] - exact) / exact);
        }
        ctx.at_most("convergence-phase-closed-form", "relative gap to |e^{it}-1-it|/t ||f|| for the phase generator",
                    "representation/differentiability", worst, 1e-8);
      }
    });

    ctx.guard("generator-consistency-" + name, "representation/generators", [&] {
      const auto errs = generator_extrapolated_error(id, g, 1e-5, 2);
      double worst = 0.0;
      for (int n = 0; n <= 2; ++n) worst = std::max(worst, errs[n] / seminorm_iter(g, n));
      ctx.at_most("generator-consistency-" + name,
                  "max_n ||extrapolated difference quotient - X f||_n / ||f||_n at t = 1e-5, n <= 2",
                  "representation/generators", worst, 1e-6);
    });
  }

  ctx.guard("norm-growth", "representation/norm-growth", [&] {
    double worst = -INFINITY;
    for (int i = 0; i < 100; ++i) {
      const GroupElement x{ctx.uniform(-5, 5), ctx.uniform(-5, 5), ctx.uniform(-5, 5)};
      for (int n = 0; n <= 3; ++n) {
        const auto [lhs, rhs] = norm_growth_check(x, g, n);
        worst = std::max(worst, lhs / rhs - 1.0);
      }
    }
    ctx.at_most("norm-growth", "max ||U(x)f||_n / ((1+x1^2+x2^2)^{n/2} ||f||_n) - 1 over 100 draws, n <= 3",
                "representation/norm-growth", worst, 1e-10);
    const auto [lhs, rhs] = norm_growth_check({0, 0, 1.3}, g, 2);
    ctx.at_most("norm-growth-phase", "| ||U(0,0,theta)f||_2 - ||f||_2 | / ||f||_2", "representation/norm-growth",
                std::fabs(lhs - rhs) / rhs, 1e-14);
  });

  ctx.guard("commutator", "lie-algebra/commutators", [&] {
    const SampledFunction f = random_mix(ctx, grid);
    const SampledFunction dm = generator_apply(GeneratorId::D, generator_apply(GeneratorId::M, f));
    const SampledFunction md = generator_apply(GeneratorId::M, generator_apply(GeneratorId::D, f));
    ctx.at_most("commutator", "||DMf - MDf - Cf|| / ||f||", "lie-algebra/commutators",
                norm(dm - md - generator_apply(GeneratorId::C, f)) / norm(f), 1e-10);
  });

  ctx.guard("derivative-gaussian", "representation/generators", [&] {
    const SampledFunction expected =
        SampledFunction::from(grid, [](double x) { return cplx(-x * std::exp(-0.5 * x * x)); });
    ctx.at_most("derivative-gaussian", "||D exp(-x^2/2) + x exp(-x^2/2)|| / ||x exp(-x^2/2)||",
                "representation/generators", rel_diff(generator_apply(GeneratorId::D, g), expected), 1e-10);
    ctx.at_most("phase-generator-square", "max |C(Cf) + f|", "representation/generators",
                max_abs(generator_apply(GeneratorId::C, generator_apply(GeneratorId::C, g)) + g), 0.0);
  });

  return ctx.finish();
}

// ----------------------------------------------------------------------- norms

/// The N- pair shared by the norms, psi-invariance and tilde-space suites.
std::pair<TestFunction, TestFunction> default_pair() {
  return {default_minus_element(20), default_minus_element(20, 0.2L, 1.0L)};
}

ExperimentReport suite_norms(const SuiteConfig& config) {
  SuiteContext ctx(config, 32.0, 4096);
  const GridSpec grid = ctx.grid();
  const SampledFunction g = gaussian(grid);

  ctx.guard("quadrature-gaussian", "plumbing", [&] {
    ctx.at_most("quadrature-gaussian", "|integral of exp(-x^2/2) - sqrt(2 pi)|", "plumbing",
                std::abs(integrate(g) - std::sqrt(2 * kPi)), 1e-10);
  });

  ctx.guard("seminorm-gaussian", "seminorms/iterative", [&] {
    ctx.at_most("seminorm-gaussian-0", "| ||G||_0 - pi^{1/4} |", "seminorms/iterative",
                std::fabs(seminorm_iter(g, 0) - std::pow(kPi, 0.25)), 1e-10);
    ctx.at_most("seminorm-gaussian-1", "| ||G||_1 - (2 sqrt(pi))^{1/2} |", "seminorms/iterative",
                std::fabs(seminorm_iter(g, 1) - std::sqrt(2 * std::sqrt(kPi))), 1e-10);
  });

  ctx.guard("seminorm-monotone", "seminorms/iterative", [&] {
    double bad = 0.0;
    for (int i = 0; i < 10; ++i) {
      const SampledFunction f = random_mix(ctx, grid);
      for (int n = 0; n < 3; ++n) {
        if (seminorm_iter(f, n + 1) < seminorm_iter(f, n)) bad += 1.0;
      }
    }
    ctx.at_most("seminorm-monotone", "decreases of ||f||_n in n over 10 random f", "seminorms/iterative", bad, 0.0);
  });

  ctx.guard("seminorm-sup", "seminorms/sup", [&] {
    const TestFunction G = TestFunction::gaussian_poly(0, 1, {1});
    ctx.at_most("seminorm-sup-00", "| ||G||_{0,0} - 1 |", "seminorms/sup", std::fabs(seminorm_sup(G, 0, 0) - 1.0),
                1e-12);
    ctx.at_most("seminorm-sup-10", "| ||G||_{1,0} - e^{-1/2} |", "seminorms/sup",
                std::fabs(seminorm_sup(G, 1, 0) - std::exp(-0.5)), 1e-10);
  });

  ctx.guard("moments", "moments/vanishing", [&] {
    const SampledFunction odd = SampledFunction::from(grid, [](double x) { return cplx(x * std::exp(-x * x)); });
    ctx.at_most("moment-odd", "|integral of x exp(-x^2)|", "moments/vanishing", std::abs(moment(odd, 0)), 1e-12);
    const TestFunction bump = TestFunction::compact_bump(0, 1, 3);
    ctx.at_most("moment-bump", "|moment_0 of x^3(1-x)^3 - 1/140|", "moments/vanishing",
                std::abs(moment(sample(bump, grid), 0) - 1.0 / 140.0), 1e-8);
    ctx.at_most("moment-derivative", "|moment_0 of the derivative of that bump|", "moments/vanishing",
                std::abs(moment(sample(bump.derivative(1), grid), 0)), 1e-10);
  });

  ctx.guard("moment-duality", "moments/fourier-duality", [&] {
    const SampledFunction f = random_mix(ctx, grid);
    double worst = 0.0;
    for (int n = 0; n <= 4; ++n) {
      const cplx lhs = moment(f, n);
      const cplx rhs = std::sqrt(2 * kPi) * std::pow(kI, n) * fourier_derivative_at_zero(f, n);
      double scale = 0.0;
      for (std::size_t j = 0; j < grid.size(); ++j) scale += std::pow(std::fabs(grid.point(j)), n) * std::abs(f[j]);
      worst = std::max(worst, std::abs(lhs - rhs) / (grid.spacing() * scale));
    }
    ctx.at_most("moment-duality", "max_n |M_n - sqrt(2 pi) i^n (Ff)^(n)(0)| / scale for n <= 4",
                "moments/fourier-duality", worst, 1e-6);
  });

  const auto [gd, hd] = default_pair();
  const SampledFunction gs = sample(gd, grid);
  const SampledFunction hs = sample(hd, grid);

  ctx.guard("class-defects", "classes/defects", [&] {
    ctx.at_most("class-defects-annihilated", "n_defect(4) of the grid-ready annihilated element", "classes/defects",
                n_defect(gs, 4), 1e-6);
    const DefectRecord r = class_defects(sample(TestFunction::compact_bump(-2, -1, 6), grid), 4);
    ctx.at_most("class-defects-support", "support_plus of a bump on (-2,-1)", "classes/defects", r.support_plus, 0.0);
    const SampledFunction mz = SampledFunction::from(grid, [](double x) { return cplx(x * std::exp(-0.5 * x * x)); });
    ctx.at_most("class-defects-hardy", "hardy_plus of P+ g for a mean-zero g", "classes/defects",
                class_defects(proj_hardy(mz, Side::plus), 2).hardy_plus, 1e-10);
  });

  ctx.guard("psi-norm", "psi/norms", [&] {
    const SampledFunction zero(grid);
    double sym = 0.0;
    double h0 = 0.0;
    double dom = -INFINITY;
    for (int n = 0; n <= 2; ++n) {
      const double v = psi_norm(gs, hs, n);
      sym = std::max(sym, std::fabs(v - psi_norm(hs, gs, n)) / v);
      const double a = seminorm_iter(-kI * proj_hardy(gs, Side::plus), n);
      const double b = seminorm_iter(kI * proj_hardy(gs, Side::minus), n);
      h0 = std::max(h0, std::fabs(psi_norm(gs, zero, n) - std::sqrt(a * a + b * b)) / std::sqrt(a * a + b * b));
      for (const SampledFunction& t : {SampledFunction(-kI * proj_hardy(gs, Side::plus)),
                                       SampledFunction(kI * proj_hardy(hs, Side::minus)),
                                       SampledFunction(kI * proj_hardy(gs, Side::minus)),
                                       SampledFunction(-kI * proj_hardy(hs, Side::plus))}) {
        dom = std::max(dom, seminorm_iter(t, n) - v);
      }
    }
    ctx.at_most("psi-norm-symmetry", "max_n |psi_norm(g,h) - psi_norm(h,g)| / psi_norm", "psi/norms", sym, 1e-14);
    ctx.at_most("psi-norm-h-zero", "max_n relative gap of psi_norm(g,0) to the two-term formula", "psi/norms", h0,
                1e-14);
    ctx.at_most("psi-norm-dominates", "max_n (largest constituent seminorm - psi_norm)", "psi/norms", dom, 0.0);
    const double anchor = psi_norm(gs, hs, 1);
    ctx.artifact("psi_norm_n1", anchor);
    ctx.greater("psi-norm-positive", "psi_norm of the default pair at n = 1", "psi/norms", anchor, 0.0);
  });

  return ctx.finish();
}

// ------------------------------------------------------------------ appendix-a

ExperimentReport suite_appendix_a(const SuiteConfig& config) {
  SuiteContext ctx(config, 32.0, 4096);
  AnnihilatorConfig ac;
  ac.K = config.max_moment;
  ac.epsilon = static_cast<Real>(config.epsilon);
  ac.mother = default_mother(ac.K + 2);

  ctx.guard("annihilator", "annihilation/construction", [&] {
    const AnnihilatorResult r = annihilate(ac);
    ctx.artifact("annihilator", annihilator_report(r, ac));

    double order_bad = 0.0;
    double lower = 0.0;
    double match = 0.0;
    double bound_ratio = 0.0;
    double closed = 0.0;
    Real prev_hi = r.mother.support().back().hi;
    for (const auto& b : r.blocks) {
      const auto supp = b.f_k.support();
      if (supp.empty() || supp.front().lo < b.a_k || supp.back().hi > b.a_k1 || b.a_k < prev_hi) order_bad += 1.0;
      prev_hi = b.a_k1;
      for (int i = 0; i < b.k; ++i) {
        lower = std::max(lower, static_cast<double>(std::fabs(b.f_k.exact_moment(i)) / l1_moment_mass(b.f_k, i)));
      }
      match = std::max(match, static_cast<double>(std::fabs(b.moment_exact - b.lambda) / std::fabs(b.lambda)));
      bound_ratio = std::max(bound_ratio, static_cast<double>(b.norm_fk / b.bound));
      closed = std::max(closed,
                        static_cast<double>(std::fabs(b.moment_closed - b.moment_exact) / std::fabs(b.moment_exact)));
    }
    ctx.at_most("block-supports", "blocks lying outside (a_k, a_{k+1}) or overlapping their predecessor",
                "annihilation/conditions", order_bad, 0.0);
    ctx.at_most("block-lower-moments", "max relative moment of order i < k of block k", "annihilation/conditions",
                lower, 1e-10);
    ctx.at_most("block-moment-match", "max |moment_k(f_k) - lambda_k| / |lambda_k|", "annihilation/conditions",
                match, 1e-10);
    ctx.greater("block-norm-bound", "min over blocks of 1 - ||f_k|| / bound_k", "annihilation/conditions",
                1.0 - bound_ratio, 0.0);
    ctx.at_most("block-closed-form", "max relative gap between the closed-form and exact k-th block moment",
                "annihilation/closed-form-moment", closed, 1e-8);

    double defect = 0.0;
    for (Real d : r.moment_defects) defect = std::max(defect, static_cast<double>(d));
    ctx.at_most("moment-defects", "max relative moment defect of f over orders 0..K", "annihilation/moments", defect,
                1e-6);
    ctx.at_most("l2-distance", "||f - g|| from the block norms", "annihilation/l2-distance",
                static_cast<double>(r.l2_distance), config.epsilon);

    // ||f - g||^2 by quadrature over each block against the sum of block norms.
    const TestFunction diff = TestFunction::sum([&] {
      std::vector<TestFunction> terms;
      for (const auto& b : r.blocks) terms.push_back(b.f_k);
      return terms;
    }());
    Real quad = 0;
    Real closed_sq = 0;
    for (const auto& b : r.blocks) {
      const Real w = (b.a_k1 - b.a_k) / 8;
      for (int s = 0; s < 8; ++s) {
        const Real lo = b.a_k + s * w;
        quad += boost::math::quadrature::gauss<Real, 30>::integrate(
            [&](Real x) { return std::norm(diff.evaluate_exact(x)); }, lo, lo + w);
      }
      closed_sq += b.norm_fk * b.norm_fk;
    }
    ctx.at_most("pythagorean-identity", "| ||f-g||^2 by quadrature - sum ||f_k||^2 | / sum ||f_k||^2",
                "annihilation/l2-distance", static_cast<double>(std::fabs(quad - closed_sq) / closed_sq), 1e-12);

    const AnnihilatorResult m = annihilate_negative(ac);
    double mirror = 0.0;
    for (std::size_t n = 0; n < m.moment_defects.size(); ++n) {
      mirror = std::max(mirror, static_cast<double>(std::fabs(m.moment_defects[n] - r.moment_defects[n])));
    }
    ctx.at_most("mirrored-defects", "max gap between moment defects of f and of its mirror image",
                "annihilation/mirror", mirror, 1e-12);

    const TestFunction shifted = TestFunction::translated(m.f, -3);
    double shift = 0.0;
    for (int n = 0; n <= ac.K; ++n) {
      shift = std::max(shift, static_cast<double>(std::fabs(exact_moment_defect(shifted, n) - m.moment_defects[n])));
    }
    ctx.at_most("translated-defects", "max change of the moment defects under translation by -3",
                "annihilation/mirror", shift, 1e-10);
  });

  return ctx.finish();
}

// -------------------------------------------------------------- psi-invariance

ExperimentReport suite_psi_invariance(const SuiteConfig& config) {
  SuiteContext ctx(config, 32.0, 4096);
  const GridSpec grid = ctx.grid();
  PsiThresholds thresholds;
  thresholds.K = std::min(config.max_moment, 4);
  const auto [gd, hd] = default_pair();

  ctx.guard("psi-synthesis", "psi/decomposition", [&] {
    const PsiElement psi = synthesize(gd, hd, grid, thresholds);
    const PsiElement same = synthesize(gd, gd, grid, thresholds);
    ctx.at_most("psi-synthesis-equal", "||f - Hg|| / ||g|| when h = g", "psi/decomposition",
                norm(same.samples - hilbert(same.g)) / norm(same.g), 1e-10);
    ctx.greater("psi-synthesis-norm", "||f|| of the default element", "psi/decomposition", norm(psi.samples), 0.0);

    std::vector<std::pair<double, double>> pts;
    for (double x1 : {0.0, grid.spacing(), 1.0, 5.0}) {
      const GroupElement xi{x1, 0.0, 0.7};
      const std::string tag = "xi1=" + std::to_string(x1);
      ctx.guard("psi-act-certified " + tag, "psi/invariance", [&] {
        const PsiElement moved = act_psi(xi, psi);
        const double defect = std::max(moved.g_cert.defects.n_defect, moved.h_cert.defects.n_defect);
        ctx.at_most("psi-act-certified " + tag, "max moment defect of the moved N- components",
                    "psi/invariance", defect, 1e-6,
                    {{"snap", moved.translation_snap},
                     {"coincidence", std::max(moved.g_cert.coincidence, moved.h_cert.coincidence)}});
        const double err = act_psi_identity_error(xi, psi);
        ctx.at_most("psi-act-identity " + tag, "||U f - (-iP+ Ug + iP- Uh)|| / ||f||", "psi/invariance", err, 1e-10);
        pts.emplace_back(x1, err);
        ctx.at_most("psi-stay-witness " + tag, "invariance witness of the default element", "psi/invariance",
                    invariance_witness(xi, psi), 1e-8);
      });
    }
    ctx.curve("act-identity", std::move(pts));

    ctx.guard("psi-act-composition", "psi/invariance", [&] {
      const GroupElement x{1.0, 0.0, 0.3};
      const GroupElement y{0.5, 0.0, 0.2};
      const PsiElement twice = act_psi(x, act_psi(y, psi));
      const PsiElement once = act_psi(multiply(x, y), psi);
      ctx.at_most("psi-act-composition", "||act_psi(x, act_psi(y, f)) - act_psi(xy, f)|| / ||f|| in S1(0)",
                  "psi/invariance", norm(twice.samples - once.samples) / norm(psi.samples), 1e-10);
    });

    ctx.guard("psi-synthesis-h-zero", "psi/decomposition", [&] {
      const PsiElement half = synthesize(gd, TestFunction(), grid, thresholds);
      ctx.at_most("psi-synthesis-h-zero", "hardy_plus defect of f = -iP+ g", "psi/decomposition",
                  hardy_defect(half.samples, Side::plus), 1e-10);
    });
  });

  ctx.guard("witness-translation", "psi/non-invariance", [&] {
    const TestFunction u = derivative_bump_element(-1, 0, 20, 4);
    const PsiElement psi = synthesize(u, u, grid, thresholds);
    std::vector<std::pair<double, double>> pts;
    int drops = 0;
    double prev = -1.0;
    for (double x1 : {-0.1, -0.25, -0.5, -1.0, -2.0}) {
      const double w = invariance_witness({x1, 0, 0}, psi);
      if (w < prev) ++drops;
      prev = w;
      pts.emplace_back(x1, w);
    }
    ctx.greater("witness-translation", "invariance witness at xi1 = -0.5 for an element on (-1, 0)",
                "psi/non-invariance", invariance_witness({-0.5, 0, 0}, psi), 0.1);
    ctx.at_most("witness-translation-monotone", "decreases of the witness as xi1 moves from -0.1 to -2",
                "psi/non-invariance", drops, 0.0);
    ctx.curve("witness-translation", std::move(pts));
  });

  ctx.guard("witness-modulation", "psi/non-invariance", [&] {
    const TestFunction u = derivative_bump_element(-24, 0, 12, 4);
    const PsiElement psi = synthesize(u, u, grid, thresholds);
    std::vector<std::pair<double, double>> pts;
    for (double x2 : {0.25, 0.5, 1.0, 2.0}) pts.emplace_back(x2, invariance_witness({0, x2, 0}, psi));
    ctx.greater("witness-modulation", "invariance witness at xi2 = 1 for an element on (-24, 0)",
                "psi/non-invariance", invariance_witness({0, 1, 0}, psi), 0.1);
    ctx.curve("witness-modulation", std::move(pts));
  });

  ctx.guard("coincidence", "hardy/halfline-coincidence", [&] {
    double worst = 0.0;
    json detail = json::array();
    for (int i = 0; i < 20; ++i) {
      TestFunction u;
      if (i % 2 == 0) {
        const double b = ctx.uniform(-3, 0);
        const double a = b - ctx.uniform(0.5, 3);
        u = derivative_bump_element(a, b, ctx.integer(16, 24), 4);
      } else {
        const int p = ctx.integer(18, 22);
        u = TestFunction::translated(default_minus_element(p), -ctx.uniform(0, 5));
      }
      const MinusCertificate c = certify_minus(u, grid, thresholds);
      worst = std::max(worst, c.coincidence);
      detail.push_back(c.coincidence);
    }
    ctx.at_most("coincidence", "max ||Q+(-iP+u - iP-u)|| / ||u|| over 20 random certified N- elements",
                "hardy/halfline-coincidence", worst, 1e-8, detail);
  });

  ctx.guard("domain-guard", "psi/invariance", [&] {
    const PsiElement psi = synthesize(gd, hd, grid, thresholds);
    double refused = 0.0;
    try {
      act_psi({-1, 0, 0}, psi);
    } catch (const DomainError&) {
      refused = 1.0;
    }
    ctx.greater("domain-guard", "act_psi refuses xi outside S1(0)", "psi/invariance", refused, 0.5);
  });

  ctx.guard("orbit", "psi/orbits", [&] {
    const TestFunction u = derivative_bump_element(-2, -1, 20, 4);
    for (const auto& [tag, xi] : {std::pair<std::string, GroupElement>{"identity", {0, 0, 0}},
                                  std::pair<std::string, GroupElement>{"translate", {1, 0, 0}}}) {
      const DefectRecord r = orbit_probe(xi, u, grid, thresholds);
      ctx.at_most("orbit-" + tag, "max(n_defect, m_defect) along the orbit of an element of N and M", "psi/orbits",
                  std::max(r.n_defect, r.m_defect), 1e-6);
    }
    const TestFunction wide = derivative_bump_element(-25, -1, 12, 4);
    const DefectRecord r = orbit_probe({0, 1, 0}, wide, grid, thresholds);
    ctx.greater("orbit-modulate", "n_defect after modulation by xi2 = 1", "psi/orbits", r.n_defect, 0.1);
    ctx.at_most("orbit-modulate-dual", "m_defect after modulation by xi2 = 1", "psi/orbits", r.m_defect, 1e-6);
  });

  return ctx.finish();
}

// ----------------------------------------------------------------- tilde-space

ExperimentReport suite_tilde_space(const SuiteConfig& config) {
  SuiteContext ctx(config, 32.0, 4096);
  const GridSpec grid = ctx.grid();
  const auto [gd, hd] = default_pair();

  ctx.guard("tilde-routes", "tilde/sign-split", [&] {
    const PsiElement psi = synthesize(gd, hd, grid);
    const SampledFunction phi = tilde_synthesize(gd, hd, grid);
    ctx.at_most("tilde-routes", "||sign-split phi - F f|| / ||F f||", "tilde/sign-split",
                rel_diff(phi, fourier(psi.samples)), 1e-8);

    const SampledFunction same = tilde_synthesize(gd, gd, grid);
    const SampledFunction gh = fourier(psi.g);
    const SampledFunction expected = multiply_by(gh, [](double y) {
      return -kI * static_cast<double>((y > 0) - (y < 0));
    });
    ctx.at_most("tilde-equal-pair", "||phi + i sgn(y) g^|| / ||g^|| when h = g", "tilde/sign-split",
                rel_diff(same, expected), 1e-8);

    const SampledFunction lower = restrict_halfline(tilde_synthesize(gd, hd, grid) - multiply_by(fourier(psi.h), [](double y) {
                                                     return 0.5 * kI * (1.0 - static_cast<double>((y > 0) - (y < 0)));
                                                   }),
                                                   Side::minus);
    ctx.at_most("tilde-halfline", "||Q-(phi - (i/2)(1 - sgn) h^)|| / ||phi||", "tilde/sign-split",
                norm(lower) / norm(phi), 1e-14);
  });

  ctx.guard("tilde-norms", "tilde/norms", [&] {
    const SampledFunction gs = sample(gd, grid);
    const SampledFunction hs = sample(hd, grid);
    double worst = 0.0;
    json detail = json::array();
    for (int n = 0; n <= 2; ++n) {
      const double a = psi_norm(gs, hs, n);
      const double b = tilde_norm(gs, hs, n);
      worst = std::max(worst, std::fabs(a - b) / a);
      detail.push_back({{"n", n}, {"psi", a}, {"tilde", b}});
    }
    ctx.at_most("tilde-norms", "max_n |psi_norm - tilde_norm| / psi_norm for n <= 2", "tilde/norms", worst, 1e-6,
                detail);
  });

  return ctx.finish();
}

// --------------------------------------------------------- semigroup-evolution

ExperimentReport suite_semigroup_evolution(const SuiteConfig& config) {
  SuiteContext ctx(config, 256.0, 16384);
  const GridSpec grid = ctx.grid();

  ctx.guard("contraction", "semigroups/contraction", [&] {
    double worst = -INFINITY;
    for (int i = 0; i < 100; ++i) {
      SampledFunction f = restrict_halfline(random_mix(ctx, grid), Side::plus);
      const GroupElement xi{-ctx.uniform(0, 5), ctx.uniform(-5, 5), ctx.uniform(-kPi, kPi)};
      const auto [before, after] = halfline_contraction(xi, f);
      worst = std::max(worst, after - before);
    }
    ctx.at_most("contraction", "max ||Q+ U(xi) f|| - ||f|| over 100 draws with xi in S1^-1, f on x >= 0",
                "semigroups/contraction", worst, 1e-12);
  });

  ctx.guard("contraction-equality", "semigroups/contraction", [&] {
    const SampledFunction f = sample(TestFunction::compact_bump(1, 2, 4), grid);
    const auto [before, after] = halfline_contraction({-1, 0, 0}, f);
    ctx.at_most("contraction-equality", "| ||Q+ U(-1,0,0) f|| - ||f|| | / ||f|| for a bump on (1,2)",
                "semigroups/contraction", std::fabs(after - before) / before, 1e-12);
    const auto [b2, a2] = halfline_contraction({0, 0, 1.1}, f);
    ctx.at_most("contraction-phase", "| ||Q+ U(0,0,theta) f|| - ||f|| |", "semigroups/contraction",
                std::fabs(a2 - b2), 0.0);
  });

  ctx.guard("compression", "semigroups/contraction", [&] {
    const SampledFunction f = sample(TestFunction::compact_bump(0.5, 1.5, 4), grid);
    const auto [before, after] = halfline_compression({1, 0, 0}, f);
    ctx.at_most("compression", "||Q+ U(1,0,0) Q+ f|| / ||Q+ f|| for a bump on (0.5, 1.5)", "semigroups/contraction",
                after / before, 0.9);
  });

  ctx.guard("hardy-step", "semigroups/hardy", [&] {
    const SampledFunction f = inverse_fourier(sample(TestFunction::compact_bump(0.1, 1, 8), grid.dual()));
    std::vector<std::pair<double, double>> pts;
    for (double x2 : {0.0, 1.0, 5.0}) {
      const double d = hardy_semigroup_step(f, x2);
      pts.emplace_back(x2, d);
      ctx.at_most("hardy-step xi2=" + std::to_string(x2), "hardy_plus defect after modulation", "semigroups/hardy", d,
                  1e-6);
    }
    const double back = hardy_semigroup_step(f, -0.5);
    pts.emplace_back(-0.5, back);
    ctx.greater("hardy-step-backward", "hardy_plus defect after modulation by xi2 = -0.5", "semigroups/hardy", back,
                1e-2);
    std::sort(pts.begin(), pts.end());
    ctx.curve("hardy-step", std::move(pts));

    // Transport to the spectral side: modulation of f is translation of f^.
    double gap = 0.0;
    for (double x2 : {1.0, 5.0, -0.5}) {
      const SampledFunction moved = act(conjugate_by_fourier({0, x2, 0}), fourier(f));
      double lower = 0.0;
      for (std::size_t k = 0; k < moved.size(); ++k) {
        const double y = moved.grid().point(k);
        const double w = y < 0 ? 1.0 : y == 0 ? 0.25 : 0.0;
        lower += w * std::norm(moved[k]);
      }
      lower = std::sqrt(lower * moved.grid().spacing()) / norm(moved);
      gap = std::max(gap, std::fabs(lower - hardy_semigroup_step(f, x2)));
    }
    ctx.at_most("hardy-step-transport", "max gap between the Hardy defect and the spectral-side support defect",
                "semigroups/conjugation", gap, 1e-8);
  });

  return ctx.finish();
}

// ----------------------------------------------------------------- conjugation

ExperimentReport suite_conjugation(const SuiteConfig& config) {
  SuiteContext ctx(config, 32.0, 4096);
  const GridSpec grid = ctx.grid();

  ctx.guard("conjugation-examples", "semigroups/conjugation", [&] {
    const double d = component_diff(conjugate_by_fourier({1, 0, 0}), {0, 1, 0}) +
                     component_diff(conjugate_by_fourier({}), {}) +
                     component_diff(conjugate_by_inverse_fourier(conjugate_by_fourier({1.5, -2, 0.3})), {1.5, -2, 0.3});
    ctx.at_most("conjugation-examples", "(1,0,0) -> (0,1,0), identity fixed, inverse conjugation undoes it",
                "semigroups/conjugation", d, 1e-15);
  });

  ctx.guard("conjugation-operator", "semigroups/conjugation", [&] {
    double fwd = 0.0;
    double inv = 0.0;
    double twice = 0.0;
    for (int i = 0; i < 50; ++i) {
      const GroupElement xi{ctx.uniform(-3, 3), ctx.uniform(-3, 3), ctx.uniform(-kPi, kPi)};
      const SampledFunction phi = random_mix(ctx, grid.dual());
      fwd = std::max(fwd, rel_diff(fourier(act(xi, inverse_fourier(phi))), act(conjugate_by_fourier(xi), phi)));
      const SampledFunction f = random_mix(ctx, grid);
      inv = std::max(inv, rel_diff(inverse_fourier(act(xi, fourier(f))), act(conjugate_by_inverse_fourier(xi), f)));
      const SampledFunction ff = fourier(fourier(f));
      const SampledFunction lhs = fourier(fourier(act(xi, inverse_fourier(inverse_fourier(ff)))));
      twice = std::max(twice, rel_diff(lhs, act(conjugate_by_fourier(conjugate_by_fourier(xi)), ff)));
    }
    ctx.at_most("conjugation-operator", "max ||F U(xi) F^-1 phi - U(conj xi) phi|| / ||phi|| over 50 random xi",
                "semigroups/conjugation", fwd, 1e-8);
    ctx.at_most("conjugation-operator-inverse", "max ||F^-1 U(xi) F f - U(conj^-1 xi) f|| / ||f|| over 50 random xi",
                "semigroups/conjugation", inv, 1e-8);
    ctx.at_most("conjugation-twice", "F^2 U(xi) F^-2 against the doubly conjugated element", "semigroups/conjugation",
                twice, 1e-8);
  });

  return ctx.finish();
}

}  // namespace

ExperimentReport run_suite(const SuiteConfig& config) {
  validate(config);
  const std::string& s = config.suite;
  if (s == "group-axioms") return suite_group_axioms(config);
  if (s == "transforms") return suite_transforms(config);
  if (s == "paley-wiener") return suite_paley_wiener(config);
  if (s == "generators") return suite_generators(config);
  if (s == "norms") return suite_norms(config);
  if (s == "appendix-a") return suite_appendix_a(config);
  if (s == "psi-invariance") return suite_psi_invariance(config);
  if (s == "tilde-space") return suite_tilde_space(config);
  if (s == "semigroup-evolution") return suite_semigroup_evolution(config);
  return suite_conjugation(config);
}

}  // namespace whsg
