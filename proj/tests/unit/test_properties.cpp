#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "whsg/heisenberg.hpp"
#include "whsg/schwartz.hpp"
#include "whsg/testfn.hpp"
#include "whsg/transforms.hpp"

using namespace whsg;

// Randomized properties over seeded draws.

namespace {

const GridSpec kGrid = GridSpec::make(32.0, 4096);

class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * std::uniform_real_distribution<double>()(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  TestFunction tree(int depth) {
    if (depth == 0) {
      const double a = uniform(-6, 4);
      const double w = uniform(0.5, 3);
      return TestFunction::compact_bump(a, a + w, integer(8, 12));
    }
    switch (integer(0, 4)) {
      case 0: {
        const double s = uniform(-3, 3);
        return TestFunction::translated(tree(depth - 1), s);
      }
      case 1:
        return TestFunction::mirrored(tree(depth - 1));
      case 2: {
        const double f = uniform(-2, 2);
        return TestFunction::scaled(tree(depth - 1), f);
      }
      case 3: {
        const double d = uniform(0.5, 1.5);
        return TestFunction::dilated(tree(depth - 1), d);
      }
      default: {
        auto left = tree(depth - 1);
        auto right = tree(depth - 1);
        return TestFunction::sum({left, right});
      }
    }
  }

  SampledFunction packet() {
    const double c = uniform(-4, 4);
    const double w = uniform(-3, 3);
    const double s = uniform(0.5, 2);
    return SampledFunction::from(kGrid, [=](double x) { return std::exp(-0.5 * (x - c) * (x - c) / (s * s)) * std::polar(1.0, w * x); });
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

TEST(Properties, GroupLaw) {
  Draws d(101);
  for (int i = 0; i < 2000; ++i) {
    const GroupElement a{d.uniform(-5, 5), d.uniform(-5, 5), d.uniform(-5, 5)};
    const GroupElement b{d.uniform(-5, 5), d.uniform(-5, 5), d.uniform(-5, 5)};
    const GroupElement c{d.uniform(-5, 5), d.uniform(-5, 5), d.uniform(-5, 5)};
    const GroupElement l = multiply(multiply(a, b), c);
    const GroupElement r = multiply(a, multiply(b, c));
    EXPECT_NEAR(l.xi1, r.xi1, 1e-12);
    EXPECT_NEAR(l.xi2, r.xi2, 1e-12);
    EXPECT_NEAR(l.xi3, r.xi3, 1e-11);
    const GroupElement e = multiply(a, inverse(a));
    EXPECT_NEAR(std::fabs(e.xi1) + std::fabs(e.xi2) + std::fabs(e.xi3), 0.0, 1e-11);
  }
}

TEST(Properties, ExactMomentsMatchQuadrature) {
  Draws d(202);
  for (int i = 0; i < 40; ++i) {
    const TestFunction f = d.tree(d.integer(0, 3));
    const SampledFunction s = sample(f, kGrid);
    for (int n = 0; n <= 3; ++n) {
      const double mass = static_cast<double>(l1_moment_mass(f, n));
      if (mass == 0.0) continue;
      EXPECT_LT(std::fabs(moment(s, n).real() - static_cast<double>(f.exact_moment(n))), 1e-8 * mass) << i << ' ' << n;
    }
  }
}

TEST(Properties, MomentsUnderStructuralMaps) {
  Draws d(303);
  for (int i = 0; i < 40; ++i) {
    const TestFunction f = d.tree(d.integer(0, 2));
    const Real s = d.uniform(-2, 2);
    const Real m0 = f.exact_moment(0);
    const Real m1 = f.exact_moment(1);
    const Real m2 = f.exact_moment(2);
    const Real scale = l1_moment_mass(f, 2) + l1_moment_mass(f, 0) + 1;
    EXPECT_LT(std::fabs(TestFunction::mirrored(f).exact_moment(1) + m1), 1e-14L * scale);
    EXPECT_LT(std::fabs(TestFunction::translated(f, s).exact_moment(1) - (m1 + s * m0)), 1e-12L * scale);
    EXPECT_LT(std::fabs(TestFunction::translated(f, s).exact_moment(2) - (m2 + 2 * s * m1 + s * s * m0)),
              1e-12L * scale * (1 + s * s));
    if (f.smoothness() >= 1) {
      EXPECT_LT(std::fabs(f.derivative(1).exact_moment(2) + 2 * m1), 1e-10L * scale * 100);
    }
  }
}

TEST(Properties, TransformIdentities) {
  Draws d(404);
  for (int i = 0; i < 30; ++i) {
    const SampledFunction f = d.packet();
    const double n = norm(f);
    EXPECT_NEAR(norm(fourier(f)), n, 1e-12 * n);
    EXPECT_LT(norm(inverse_fourier(fourier(f)) - f), 1e-12 * n);
    EXPECT_LT(norm(proj_hardy(f, Side::plus) + proj_hardy(f, Side::minus) - f), 1e-13 * n);
    const cplx j{0, 1};
    EXPECT_LT(norm(hilbert(f) + j * (proj_hardy(f, Side::plus) - proj_hardy(f, Side::minus))), 1e-13 * n);
    EXPECT_LE(norm(hilbert(f)), n * (1 + 1e-13));
  }
}

TEST(Properties, RepresentationIsUnitary) {
  Draws d(505);
  for (int i = 0; i < 30; ++i) {
    const SampledFunction f = d.packet();
    const GroupElement xi{d.uniform(-3, 3), d.uniform(-3, 3), d.uniform(-3, 3)};
    EXPECT_NEAR(norm(act(xi, f, ActMode::spectral)), norm(f), 1e-10 * norm(f));
  }
}
