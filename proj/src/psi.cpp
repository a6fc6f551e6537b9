#include "whsg/psi.hpp"

#include <cmath>

#include "whsg/annihilator.hpp"
#include "whsg/errors.hpp"
#include "whsg/transforms.hpp"

namespace whsg {

namespace {

const cplx kI{0.0, 1.0};

double coincidence_defect(const SampledFunction& u) {
  const double total = norm(u);
  if (total == 0.0) return 0.0;
  SampledFunction both = -kI * proj_hardy(u, Side::plus) - kI * proj_hardy(u, Side::minus);
  return norm(restrict_halfline(both, Side::plus)) / total;
}

SampledFunction synthesize_samples(const SampledFunction& g, const SampledFunction& h) {
  return -kI * proj_hardy(g, Side::plus) + kI * proj_hardy(h, Side::minus);
}

GroupElement snapped(const GroupElement& xi, const GridSpec& grid) {
  return {snap_to_grid(xi.xi1, grid), xi.xi2, xi.xi3};
}

/// Descriptor form of U(xi) u.
TestFunction act_descriptor(const GroupElement& xi, const TestFunction& u) {
  TestFunction out = xi.xi1 == 0.0 ? u : TestFunction::translated(u, -xi.xi1);
  if (xi.xi2 != 0.0 || xi.xi3 != 0.0) out = TestFunction::modulated(out, xi.xi2, xi.xi3);
  return out;
}

}  // namespace

MinusCertificate certify_minus(const TestFunction& u, const GridSpec& grid, const PsiThresholds& thresholds) {
  const auto supp = u.support();
  if (!supp.empty() && supp.back().hi > 0) {
    throw ClassError("support defect: descriptor reaches x = " + std::to_string(static_cast<double>(supp.back().hi)));
  }
  const SampledFunction s = sample(u, grid);
  MinusCertificate cert;
  cert.defects = class_defects(s, thresholds.K);
  cert.coincidence = coincidence_defect(s);
  if (cert.defects.support_plus != 0.0) {
    throw ClassError("support defect: mass fraction " + std::to_string(cert.defects.support_plus) + " on x >= 0");
  }
  if (!(cert.defects.n_defect < thresholds.moment)) {
    throw ClassError("moment defect " + std::to_string(cert.defects.n_defect) + " exceeds " +
                     std::to_string(thresholds.moment));
  }
  if (!(cert.coincidence < thresholds.coincidence)) {
    throw ClassError("coincidence defect " + std::to_string(cert.coincidence) + " exceeds " +
                     std::to_string(thresholds.coincidence));
  }
  return cert;
}

PsiElement synthesize(const TestFunction& g_desc, const TestFunction& h_desc, const GridSpec& grid,
                      const PsiThresholds& thresholds) {
  MinusCertificate gc = certify_minus(g_desc, grid, thresholds);
  MinusCertificate hc = certify_minus(h_desc, grid, thresholds);
  SampledFunction g = sample(g_desc, grid);
  SampledFunction h = sample(h_desc, grid);
  SampledFunction f = synthesize_samples(g, h);
  return PsiElement{g_desc, h_desc, grid, std::move(g), std::move(h), std::move(f), gc, hc, thresholds, 0.0};
}

PsiElement act_psi(const GroupElement& xi, const PsiElement& psi) {
  if (!in_semigroup(xi, {Semigroup::S1zero, false})) {
    throw DomainError("act_psi needs xi in S1(0); use invariance_witness for other elements");
  }
  const GroupElement s = snapped(xi, psi.grid);
  PsiElement out = synthesize(act_descriptor(s, psi.g_desc), act_descriptor(s, psi.h_desc), psi.grid, psi.thresholds);
  out.translation_snap = s.xi1 - xi.xi1;
  return out;
}

double act_psi_identity_error(const GroupElement& xi, const PsiElement& psi) {
  const GroupElement s = snapped(xi, psi.grid);
  const SampledFunction direct = act(s, psi.samples, ActMode::grid);
  const PsiElement moved = act_psi(xi, psi);
  const double total = norm(psi.samples);
  return total == 0.0 ? 0.0 : norm(direct - moved.samples) / total;
}

double invariance_witness(const GroupElement& xi, const PsiElement& psi) {
  const double total = norm(psi.g);
  if (total == 0.0) return 0.0;
  const SampledFunction moved = act(snapped(xi, psi.grid), psi.g, ActMode::grid);
  const double spill = norm(restrict_halfline(moved, Side::plus)) / total;
  return std::max(spill, moment_defect(moved, 0));
}

SampledFunction tilde_synthesize(const TestFunction& g_desc, const TestFunction& h_desc, const GridSpec& grid,
                                 const PsiThresholds& thresholds) {
  certify_minus(g_desc, grid, thresholds);
  certify_minus(h_desc, grid, thresholds);
  const SampledFunction gh = fourier(sample(g_desc, grid));
  const SampledFunction hh = fourier(sample(h_desc, grid));
  SampledFunction phi(gh.grid());
  auto& values = phi.mutable_values();
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double y = phi.grid().point(k);
    const double sgn = static_cast<double>((y > 0) - (y < 0));
    values[k] = -0.5 * kI * (1.0 + sgn) * gh[k] + 0.5 * kI * (1.0 - sgn) * hh[k];
  }
  return phi;
}

double tilde_norm(const SampledFunction& g, const SampledFunction& h, int n, const SeminormConfig& config) {
  const double a = seminorm_iter(fourier(g), n, config);
  const double b = seminorm_iter(fourier(h), n, config);
  return std::sqrt(a * a + b * b);
}

DefectRecord orbit_probe(const GroupElement& xi, const TestFunction& u, const GridSpec& grid,
                         const PsiThresholds& thresholds) {
  const SampledFunction s = sample(u, grid);
  const DefectRecord base = class_defects(s, thresholds.K);
  if (!(base.n_defect < thresholds.moment)) {
    throw ClassError("orbit probe input has moment defect " + std::to_string(base.n_defect));
  }
  if (!(base.m_defect < thresholds.moment)) {
    throw ClassError("orbit probe input has dual moment defect " + std::to_string(base.m_defect));
  }
  return class_defects(act(snapped(xi, grid), s, ActMode::grid), thresholds.K);
}

std::pair<double, double> halfline_contraction(const GroupElement& xi, const SampledFunction& f) {
  if (!in_semigroup(xi, {Semigroup::S1, true})) throw DomainError("halfline_contraction needs xi in S1^-1");
  if (norm(restrict_halfline(f, Side::minus)) != 0.0) throw ClassError("input is not supported on x >= 0");
  const SampledFunction moved = act(snapped(xi, f.grid()), f, ActMode::grid);
  return {norm(f), norm(restrict_halfline(moved, Side::plus))};
}

std::pair<double, double> halfline_compression(const GroupElement& xi, const SampledFunction& f) {
  const SampledFunction plus = restrict_halfline(f, Side::plus);
  const SampledFunction moved = act(snapped(xi, f.grid()), plus, ActMode::grid);
  return {norm(plus), norm(restrict_halfline(moved, Side::plus))};
}

double hardy_semigroup_step(const SampledFunction& f, double xi2) {
  const double before = hardy_defect(f, Side::plus);
  if (!(before < 1e-8)) throw ClassError("input is not in the upper Hardy class (defect " + std::to_string(before) + ")");
  if (xi2 == 0.0) return before;
  return hardy_defect(act({0.0, xi2, 0.0}, f, ActMode::spectral), Side::plus);
}

TestFunction default_minus_element(int p, Real lo, Real hi) {
  AnnihilatorConfig config;
  config.K = 4;
  config.epsilon = 1e12L;
  const auto bump = TestFunction::compact_bump(lo, hi, p);
  config.mother = TestFunction::scaled(bump, 1 / bump.exact_moment(0));
  const TestFunction f = annihilate_negative(config).f;
  return TestFunction::scaled(f, 1 / std::sqrt(f.exact_l2_norm_sq()));
}

TestFunction derivative_bump_element(Real a, Real b, int p, int K) {
  const TestFunction d = TestFunction::compact_bump(a, b, p).derivative(K + 1);
  return TestFunction::scaled(d, 1 / std::sqrt(d.exact_l2_norm_sq()));
}

}  // namespace whsg
