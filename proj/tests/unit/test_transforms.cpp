#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "whsg/testfn.hpp"
#include "whsg/transforms.hpp"

using namespace whsg;

namespace {

const GridSpec kGrid = GridSpec::make(32.0, 4096);

SampledFunction gauss(const GridSpec& g, double c = 0.0) {
  return SampledFunction::from(g, [c](double x) { return cplx(std::exp(-0.5 * (x - c) * (x - c))); });
}

double rel(const SampledFunction& a, const SampledFunction& b) { return norm(a - b) / norm(b); }

}  // namespace

TEST(Fourier, GaussianAgainstQuadratureOracle) {
  // Reference transform of x^2 e^{-x^2/2} at a few frequencies by direct quadrature.
  const auto f = SampledFunction::from(kGrid, [](double x) { return cplx(x * x * std::exp(-0.5 * x * x)); });
  const auto fh = fourier(f);
  for (std::size_t k : {2048ul, 2050ul, 2060ul, 2100ul}) {
    const long double t = fh.grid().point(k);
    const long double re = oracle::integrate(
        [t](long double x) { return x * x * std::exp(-0.5L * x * x) * std::cos(x * t); }, -32, 32, 512);
    const long double ref = re / std::sqrt(2 * std::numbers::pi_v<long double>);
    EXPECT_NEAR(fh[k].real(), static_cast<double>(ref), 1e-12) << k;
    EXPECT_NEAR(fh[k].imag(), 0.0, 1e-12);
  }
}

TEST(Fourier, GaussianClosedForm) {
  const auto fh = fourier(gauss(kGrid));
  EXPECT_EQ(fh.grid(), kGrid.dual());
  double err = 0.0;
  for (std::size_t k = 0; k < fh.size(); ++k) {
    const double t = fh.grid().point(k);
    err = std::max(err, std::abs(fh[k] - std::exp(-0.5 * t * t)));
  }
  EXPECT_LT(err, 1e-10);
}

TEST(Fourier, UnitaryAndInvertible) {
  const auto f = SampledFunction::from(kGrid, [](double x) {
    return std::exp(-0.3 * (x - 1) * (x - 1)) * std::polar(1.0, 2.0 * x) + cplx(0, 0.5) * std::exp(-x * x);
  });
  const auto fh = fourier(f);
  EXPECT_NEAR(norm(fh) / norm(f), 1.0, 1e-13);
  EXPECT_LT(rel(inverse_fourier(fh), f), 1e-13);
  EXPECT_EQ(inverse_fourier(fh).grid(), kGrid);
}

TEST(Fourier, TranslationBecomesPhase) {
  const auto f = gauss(kGrid, 0.0);
  const auto moved = gauss(kGrid, 1.5);
  const auto lhs = fourier(moved);
  const auto rhs = multiply_by(fourier(f), [](double t) { return std::polar(1.0, -1.5 * t); });
  EXPECT_LT(rel(lhs, rhs), 1e-12);
  EXPECT_LT(rel(spectral_translate(f, 1.5), moved), 1e-12);
}

TEST(Hilbert, SignConventionAgainstPrincipalValue) {
  const auto f = SampledFunction::from(kGrid, [](double x) { return cplx(1.0 / (1.0 + x * x)); });
  const auto pv = hilbert(f, HilbertMethod::principal_value);
  const auto mult = hilbert(f, HilbertMethod::multiplier, 32);
  EXPECT_LT(rel(pv, mult), 1e-3);
  // Positive on x > 0: the transform of 1/(1+x^2) is x/(1+x^2).
  EXPECT_GT(pv[3000].real(), 0.0);
  EXPECT_GT(mult[3000].real(), 0.0);
}

TEST(Hilbert, AnalyticPair) {
  const GridSpec g = GridSpec::make(64.0, 8192);
  const auto F = [](double x) { return std::pow(cplx(x, 1.0), -6); };
  const auto re = SampledFunction::from(g, [&](double x) { return cplx(F(x).real()); });
  const auto im = SampledFunction::from(g, [&](double x) { return cplx(F(x).imag()); });
  EXPECT_LT(rel(hilbert(re), im), 1e-6);
}

TEST(Hilbert, InvolutionOnMeanZero) {
  const auto f = SampledFunction::from(kGrid, [](double x) { return cplx(x * std::exp(-0.5 * x * x)); });
  EXPECT_LT(norm(hilbert(hilbert(f)) + f) / norm(f), 1e-10);
}

TEST(Hardy, ProjectionsPartitionAndIdempotence) {
  const auto f = SampledFunction::from(kGrid, [](double x) { return cplx(x, 1.0) * std::exp(-0.5 * x * x); });
  const auto p = proj_hardy(f, Side::plus);
  const auto m = proj_hardy(f, Side::minus);
  EXPECT_LT(rel(p + m, f), 1e-14);
  const auto mz = SampledFunction::from(kGrid, [](double x) { return cplx(x * std::exp(-0.5 * x * x)); });
  const auto pm = proj_hardy(mz, Side::plus);
  EXPECT_LT(norm(proj_hardy(pm, Side::plus) - pm) / norm(mz), 1e-13);
  EXPECT_LT(hardy_defect(pm, Side::plus), 1e-10);
  // P+ - P- = iH.
  const auto diff = proj_hardy(mz, Side::plus) - proj_hardy(mz, Side::minus);
  EXPECT_LT(rel(diff, cplx(0, 1) * hilbert(mz)), 1e-13);
}

TEST(Hardy, PaleyWienerSupport) {
  const GridSpec g = GridSpec::make(32.0, 8192);
  const auto f = sample(TestFunction::compact_bump(1, 2, 4), g);
  EXPECT_LT(norm(proj_hardy(fourier(f), Side::plus)) / norm(f), 1e-6);
  const auto u = inverse_fourier(sample(TestFunction::compact_bump(0.5, 3, 6), g.dual()));
  EXPECT_LT(hardy_defect(u, Side::plus), 1e-10);
  EXPECT_GT(hardy_defect(u, Side::minus), 0.99);
}

TEST(Transforms, SpectralDerivative) {
  const auto d = spectral_derivative(gauss(kGrid), 2);
  const auto expected = SampledFunction::from(kGrid, [](double x) { return cplx((x * x - 1) * std::exp(-0.5 * x * x)); });
  EXPECT_LT(rel(d, expected), 1e-10);
}

TEST(Transforms, PaddingRoundTrip) {
  const auto f = gauss(kGrid);
  EXPECT_LT(rel(apply_multiplier(f, [](double) { return cplx(1.0); }, 4), f), 1e-13);
}
