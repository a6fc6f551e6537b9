#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "oracle.hpp"
#include "whsg/errors.hpp"
#include "whsg/grid.hpp"

using namespace whsg;

TEST(Grid, PointsAndSpacing) {
  const GridSpec g = GridSpec::make(32.0, 4096);
  EXPECT_DOUBLE_EQ(g.spacing(), 64.0 / 4096);
  EXPECT_DOUBLE_EQ(g.point(0), -32.0);
  EXPECT_EQ(g.point(g.zero_index()), 0.0);
  EXPECT_DOUBLE_EQ(g.point(4095), 32.0 - g.spacing());
  EXPECT_EQ(g.points().size(), 4096u);
}

TEST(Grid, DualGrid) {
  const GridSpec g = GridSpec::make(32.0, 4096);
  const GridSpec d = g.dual();
  EXPECT_TRUE(d.is_dual());
  EXPECT_DOUBLE_EQ(d.half_width(), std::numbers::pi * 4096 / 64.0);
  EXPECT_DOUBLE_EQ(d.spacing(), std::numbers::pi / 32.0);
  EXPECT_EQ(d.dual(), g);
}

TEST(Grid, Validation) {
  EXPECT_THROW(GridSpec::make(0.0, 64), ConfigError);
  EXPECT_THROW(GridSpec::make(-1.0, 64), ConfigError);
  EXPECT_THROW(GridSpec::make(NAN, 64), ConfigError);
  EXPECT_THROW(GridSpec::make(1.0, 100), ConfigError);
  EXPECT_THROW(GridSpec::make(1.0, 2), ConfigError);
  EXPECT_NO_THROW(GridSpec::make(1.0, 4));
}

TEST(Grid, WidenedKeepsSpacing) {
  const GridSpec g = GridSpec::make(8.0, 256);
  const GridSpec w = g.widened(4);
  EXPECT_DOUBLE_EQ(w.spacing(), g.spacing());
  EXPECT_DOUBLE_EQ(w.half_width(), 32.0);
  EXPECT_THROW(g.widened(3), ConfigError);
}

TEST(Grid, QuadratureMatchesOracle) {
  const GridSpec g = GridSpec::make(32.0, 4096);
  const auto f = SampledFunction::from(g, [](double x) { return cplx(std::exp(-0.5 * x * x) * (1 + x * x)); });
  const long double ref =
      oracle::integrate([](long double x) { return std::exp(-0.5L * x * x) * (1 + x * x); }, -32, 32, 256);
  EXPECT_NEAR(integrate(f).real(), static_cast<double>(ref), 1e-12);
  const long double ref_norm =
      std::sqrt(oracle::integrate([](long double x) { return std::exp(-x * x); }, -32, 32, 256));
  const auto gauss = SampledFunction::from(g, [](double x) { return cplx(std::exp(-0.5 * x * x)); });
  EXPECT_NEAR(norm(gauss), static_cast<double>(ref_norm), 1e-12);
  EXPECT_NEAR(inner(gauss, gauss).real(), norm(gauss) * norm(gauss), 1e-13);
}

TEST(Grid, ShapeMismatch) {
  const SampledFunction a(GridSpec::make(1.0, 16));
  const SampledFunction b(GridSpec::make(1.0, 32));
  EXPECT_THROW(a + b, ShapeError);
  EXPECT_THROW(inner(a, b), ShapeError);
  EXPECT_THROW(SampledFunction(GridSpec::make(1.0, 16), std::vector<cplx>(8)), ShapeError);
}

TEST(Grid, HalflineRestriction) {
  const GridSpec g = GridSpec::make(4.0, 64);
  const auto one = SampledFunction::from(g, [](double) { return cplx(1.0); });
  const auto plus = restrict_halfline(one, Side::plus);
  const auto minus = restrict_halfline(one, Side::minus);
  for (std::size_t j = 0; j < g.size(); ++j) {
    EXPECT_EQ(plus[j] + minus[j], cplx(1.0));
    EXPECT_EQ(plus[j] == cplx(1.0), g.point(j) >= 0);
  }
}

TEST(Grid, CsvHeader) {
  const GridSpec g = GridSpec::make(1.0, 4);
  std::ostringstream out;
  write_csv(out, SampledFunction::from(g, [](double x) { return cplx(x, -x); }));
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("x,re,im\n", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}
