#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "whsg/annihilator.hpp"
#include "whsg/errors.hpp"

using namespace whsg;

namespace {

AnnihilatorConfig small_config(int K, int p, Real eps) {
  AnnihilatorConfig c;
  c.K = K;
  c.epsilon = eps;
  c.mother = default_mother(p);
  return c;
}

long double l2_sq_oracle(const TestFunction& f, Real lo, Real hi) {
  return oracle::integrate([&](long double x) { return std::norm(f.evaluate_exact(x)); }, lo, hi, 128);
}

long double moment_oracle(const TestFunction& f, int n, Real lo, Real hi) {
  return oracle::integrate([&](long double x) { return std::pow(x, n) * f.evaluate_exact(x).real(); }, lo, hi, 128);
}

}  // namespace

TEST(Annihilator, DefaultMotherHasUnitIntegral) {
  const auto g = default_mother(6);
  EXPECT_NEAR(static_cast<double>(moment_oracle(g, 0, 0.1L, 0.9L)), 1.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(g.support().front().lo), 0.1, 1e-18);
  EXPECT_NEAR(static_cast<double>(g.support().back().hi), 0.9, 1e-18);
}

TEST(Annihilator, FirstIntervalMatchesIndependentPredicate) {
  const AnnihilatorConfig c = small_config(0, 3, 0.1L);
  const long double gnorm = std::sqrt(l2_sq_oracle(c.mother, 0.1L, 0.9L));
  const long double lambda = -1;  // unit-integral mother
  const long double cst = std::fabs(lambda) * 2 / c.epsilon;
  auto holds = [&](long double w) {
    return std::pow(w, 1.5L) > cst * std::pow(c.a0, 1.5L) * gnorm && std::pow(w, 0.5L) > cst * std::pow(c.a0, 0.5L) * gnorm;
  };
  int m = 0;
  while (!holds(std::ldexp(1.0L, m))) ++m;
  const Real a1 = choose_interval(0, c.a0, lambda, 1, gnorm, c);
  EXPECT_EQ(a1, c.a0 + std::ldexp(1.0L, m));
  if (m > 0) {
    EXPECT_FALSE(holds(std::ldexp(1.0L, m - 1)));
  }
  const AnnihilatorResult r = annihilate(c);
  ASSERT_EQ(r.blocks.size(), 1u);
  EXPECT_EQ(r.blocks[0].a_k1, a1);
}

TEST(Annihilator, ZeroLambdaTakesUnitStep) {
  const AnnihilatorConfig c = small_config(2, 6, 0.1L);
  EXPECT_EQ(choose_interval(1, 7.5L, 0, 1, 1, c), 8.5L);
}

TEST(Annihilator, BlockCoefficientFormula) {
  const AnnihilatorConfig c = small_config(2, 6, 0.1L);
  const BlockRecord b = build_block(1, 2.0L, 6.0L, 0.5L, c);
  // gamma = (-1)^k lambda / (k! I) (a0 / w)^{k+1} with k = 1, I = 1, w = 4.
  EXPECT_NEAR(static_cast<double>(b.gamma), -0.5 * std::pow(1.25 / 4.0, 2), 1e-18);
  EXPECT_NEAR(static_cast<double>(b.f_k.support().front().lo), 2.0 + 4.0 * 0.1 / 1.25, 1e-15);
  EXPECT_NEAR(static_cast<double>(b.f_k.support().back().hi), 2.0 + 4.0 * 0.9 / 1.25, 1e-15);
  EXPECT_THROW(build_block(1, 2.0L, 2.0L, 0.5L, c), ConfigError);
}

TEST(Annihilator, BlocksAgainstQuadrature) {
  const AnnihilatorConfig c = small_config(2, 6, 1.0L);
  const AnnihilatorResult r = annihilate(c);
  ASSERT_EQ(r.blocks.size(), 3u);
  long double sum_sq = 0;
  for (const auto& b : r.blocks) {
    const long double nsq = l2_sq_oracle(b.f_k, b.a_k, b.a_k1);
    EXPECT_NEAR(static_cast<double>(b.norm_fk / std::sqrt(nsq)), 1.0, 1e-12) << b.k;
    const long double mk = moment_oracle(b.f_k, b.k, b.a_k, b.a_k1);
    EXPECT_NEAR(static_cast<double>(b.moment_closed / mk), 1.0, 1e-10) << b.k;
    EXPECT_NEAR(static_cast<double>(b.moment_closed / b.moment_exact), 1.0, 1e-12) << b.k;
    for (int n = 0; n < b.k; ++n) {
      EXPECT_LT(std::fabs(moment_oracle(b.f_k, n, b.a_k, b.a_k1)) / std::fabs(mk), 1e-10) << b.k << ' ' << n;
    }
    EXPECT_LT(b.norm_fk, b.bound);
    sum_sq += nsq;
  }
  // Integrate the assembled function piece by piece: the mother on (0, a0), then each block interval.
  std::vector<std::pair<Real, Real>> pieces{{0, c.a0}};
  for (const auto& b : r.blocks) pieces.emplace_back(b.a_k, b.a_k1);
  const TestFunction diff = TestFunction::sum({r.f, TestFunction::scaled(r.mother, -1)});
  long double diff_sq = 0;
  for (const auto& [lo, hi] : pieces) diff_sq += l2_sq_oracle(diff, lo, hi);
  EXPECT_NEAR(static_cast<double>(std::sqrt(diff_sq) / r.l2_distance), 1.0, 1e-10);
  EXPECT_NEAR(static_cast<double>(std::sqrt(sum_sq) / r.l2_distance), 1.0, 1e-12);
  EXPECT_LE(r.l2_distance, c.epsilon);
  for (int n = 0; n <= c.K; ++n) {
    long double m = 0;
    long double mass = 0;
    for (const auto& [lo, hi] : pieces) {
      m += moment_oracle(r.f, n, lo, hi);
      mass += oracle::integrate([&](long double x) { return std::pow(x, n) * std::fabs(r.f.evaluate_exact(x).real()); },
                                lo, hi, 512);
    }
    EXPECT_LT(std::fabs(m) / mass, 1e-9) << n;
  }
}

TEST(Annihilator, DefaultRunAnchors) {
  const AnnihilatorConfig c;
  const AnnihilatorResult r = annihilate(c);
  ASSERT_EQ(r.blocks.size(), 5u);
  EXPECT_EQ(r.blocks[0].a_k1, 262145.25L);
  EXPECT_NEAR(static_cast<double>(r.blocks[4].a_k1 / 1.72005642501177315127e+507L), 1.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(r.l2_distance), 0.0035667239682375305, 1e-15);
  EXPECT_LE(r.l2_distance, c.epsilon);
  for (const auto& b : r.blocks) {
    EXPECT_LT(b.norm_fk, b.bound) << b.k;
    EXPECT_LT(std::fabs(b.moment_closed / b.moment_exact - 1), 1e-8L) << b.k;
  }
  for (Real d : r.moment_defects) EXPECT_LT(d, 1e-6L);
}

TEST(Annihilator, MirroredSupport) {
  const AnnihilatorConfig c = small_config(2, 6, 1.0L);
  const AnnihilatorResult plus = annihilate(c);
  const AnnihilatorResult minus = annihilate_negative(c);
  EXPECT_TRUE(minus.mirrored);
  const auto supp = minus.f.support();
  EXPECT_GT(supp.front().lo, -plus.blocks.back().a_k1 - 1e-9L);
  EXPECT_LT(supp.back().hi, 0);
  for (int n = 0; n <= c.K; ++n) {
    EXPECT_NEAR(static_cast<double>(minus.moment_defects[n]), static_cast<double>(plus.moment_defects[n]), 1e-12);
  }
  for (Real x : {-0.5L, -3.0L, -100.0L}) {
    EXPECT_EQ(minus.f.evaluate_exact(x), plus.f.evaluate_exact(-x));
  }
}

TEST(Annihilator, RejectsBadConfigurations) {
  AnnihilatorConfig c;
  c.K = -1;
  EXPECT_THROW(annihilate(c), ConfigError);
  c = {};
  c.epsilon = 0;
  EXPECT_THROW(annihilate(c), ConfigError);
  c = {};
  c.a0 = 1;
  EXPECT_THROW(annihilate(c), ConfigError);
  c = {};
  c.mother = TestFunction::compact_bump(0.1L, 2.0L, 6);
  EXPECT_THROW(annihilate(c), ConfigError);
  c = {};
  c.K = 0;
  c.mother = TestFunction::compact_bump(0.1L, 0.9L, 6).derivative(1);
  EXPECT_THROW(annihilate(c), ConfigError);
  c = {};
  c.mother = default_mother(3);
  EXPECT_THROW(annihilate(c), CapabilityError);
  EXPECT_THROW(annihilate(AnnihilatorConfig{.K = 0, .epsilon = 1, .a0 = 1.25L, .mother = TestFunction()}), ConfigError);
}

TEST(Annihilator, ReportShape) {
  const AnnihilatorConfig c = small_config(1, 6, 0.5L);
  const auto j = annihilator_report(annihilate(c), c);
  EXPECT_EQ(j.at("K"), 1);
  EXPECT_EQ(j.at("blocks").size(), 2u);
  EXPECT_EQ(j.at("moment_defects").size(), 2u);
  EXPECT_FALSE(j.at("mirrored").get<bool>());
  for (const char* key : {"a_k", "a_k1", "gamma_k", "lambda_k", "norm_fk", "bound"}) {
    EXPECT_TRUE(j.at("blocks")[0].contains(key)) << key;
  }
}
