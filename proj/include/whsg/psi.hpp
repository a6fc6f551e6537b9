#pragma once

#include <string>
#include <utility>

#include "whsg/grid.hpp"
#include "whsg/heisenberg.hpp"
#include "whsg/schwartz.hpp"
#include "whsg/testfn.hpp"

namespace whsg {

/// Thresholds of the finite-resolution N- certificate.
struct PsiThresholds {
  int K = 4;
  double moment = 1e-6;
  double coincidence = 1e-8;
};

struct MinusCertificate {
  DefectRecord defects;
  double coincidence = 0.0;  // ||Q+(-iP+u - iP-u)|| / ||u||
};

/// Certifies u as an N- element on the grid; throws ClassError naming the
/// failed defect.
MinusCertificate certify_minus(const TestFunction& u, const GridSpec& grid, const PsiThresholds& thresholds = {});

/// f = -iP+ g + iP- h for certified N- descriptors g and h.
struct PsiElement {
  TestFunction g_desc;
  TestFunction h_desc;
  GridSpec grid;
  SampledFunction g;
  SampledFunction h;
  SampledFunction samples;
  MinusCertificate g_cert;
  MinusCertificate h_cert;
  PsiThresholds thresholds;
  double translation_snap = 0.0;  // applied minus requested xi1 of the last act_psi
};

PsiElement synthesize(const TestFunction& g_desc, const TestFunction& h_desc, const GridSpec& grid,
                      const PsiThresholds& thresholds = {});

/// Acts with xi in S1(0) on the descriptors (xi1 snapped to the grid) and
/// re-certifies.  Throws DomainError outside S1(0).
PsiElement act_psi(const GroupElement& xi, const PsiElement& psi);

/// ||act(xi, psi.samples) - act_psi(xi, psi).samples|| / ||psi.samples||, grid mode.
double act_psi_identity_error(const GroupElement& xi, const PsiElement& psi);

/// max(||Q+ U g|| / ||g||, moment_defect(U g, 0)) with U in grid mode, xi1
/// snapped.  Small exactly when U(xi) keeps g in N-.
double invariance_witness(const GroupElement& xi, const PsiElement& psi);

/// phi(x) = -(i/2)(1 + sgn x) g^(x) + (i/2)(1 - sgn x) h^(x) on the dual grid.
SampledFunction tilde_synthesize(const TestFunction& g_desc, const TestFunction& h_desc, const GridSpec& grid,
                                 const PsiThresholds& thresholds = {});

/// (||g^||_n^2 + ||h^||_n^2)^{1/2}.
double tilde_norm(const SampledFunction& g, const SampledFunction& h, int n, const SeminormConfig& config = {});

/// Defect record of U(xi) u, grid mode with xi1 snapped.  Requires u to be
/// certified in N and M (n_defect and m_defect below the threshold).
DefectRecord orbit_probe(const GroupElement& xi, const TestFunction& u, const GridSpec& grid,
                         const PsiThresholds& thresholds = {});

/// (||f||, ||Q+ U(xi) f||) for xi in S1^-1 and f supported on x >= 0.
std::pair<double, double> halfline_contraction(const GroupElement& xi, const SampledFunction& f);

/// (||Q+ f||, ||Q+ U(xi) Q+ f||) for any xi; strictly contractive when xi1 > 0
/// pushes mass across the origin.
std::pair<double, double> halfline_compression(const GroupElement& xi, const SampledFunction& f);

/// hardy_plus defect of e^{i x xi2} f; requires hardy_plus(f) < 1e-8.
double hardy_semigroup_step(const SampledFunction& f, double xi2);

/// Grid-ready N- element: the mirrored moment-annihilated bump
/// (K = 4, exponent p, widths 1), normalized to unit L2 norm.
TestFunction default_minus_element(int p = 20, Real lo = 0.1L, Real hi = 0.9L);

/// (K+1)-th derivative of (x-a)^p (b-x)^p: exact moments 0..K vanish.
TestFunction derivative_bump_element(Real a, Real b, int p, int K);

}  // namespace whsg
