#pragma once

#include <complex>

#include "whsg/grid.hpp"
#include "whsg/testfn.hpp"

namespace whsg {

/// Largest order accepted by the grid-based iterative tower.
inline constexpr int kSeminormHardCap = 4;

struct SeminormConfig {
  int max_order = 3;
};

/// ||f||_0 = ||f||, ||f||_{n+1}^2 = ||Mf||_n^2 + ||Df||_n^2 + ||f||_n^2.
/// Throws CapabilityError when n exceeds max_order or the hard cap.
double seminorm_iter(const SampledFunction& f, int n, const SeminormConfig& config = {});

/// sup_x |x^m f^{(n)}(x)| from a dense scan refined by Brent's method.
double seminorm_sup(const TestFunction& f, int m, int n);

/// Integral of x^n f.
cplx moment(const SampledFunction& f, int n);

/// |int x^n f| / (dx sum |x_j^n f_j|); zero for the zero function.
double moment_defect(const SampledFunction& f, int n);

/// n-th derivative of fourier(f) at t = 0 via spectral differentiation.
cplx fourier_derivative_at_zero(const SampledFunction& f, int n);

inline constexpr int kMaxDefectOrder = 8;

/// Class-membership defects; zero means membership at the grid resolution.
struct DefectRecord {
  int order = 0;               // K
  double n_defect = 0.0;       // max_{n<=K} moment_defect(f, n)
  double m_defect = 0.0;       // n_defect of inverse_fourier(f)
  double hardy_plus = 0.0;     // ||P- f|| / ||f||
  double hardy_minus = 0.0;    // ||P+ f|| / ||f||
  double support_plus = 0.0;   // ||Q+ f|| / ||f||
  double support_minus = 0.0;  // ||Q- f|| / ||f||
};

DefectRecord class_defects(const SampledFunction& f, int K);

/// max_{n<=K} moment_defect(f, n).
double n_defect(const SampledFunction& f, int K);

/// Four-term norm of the pair (g, h):
/// ||-iP+g||_n^2 + ||iP-h||_n^2 + ||iP-g||_n^2 + ||-iP+h||_n^2.
double psi_norm(const SampledFunction& g, const SampledFunction& h, int n, const SeminormConfig& config = {});

}  // namespace whsg
