#pragma once

#include <complex>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "whsg/grid.hpp"

namespace whsg {

/// Extended precision used by the closed-form (descriptor) arithmetic.  The
/// moment-annihilation blocks reach supports far beyond the double range.
using Real = long double;
using RealComplex = std::complex<Real>;

struct Interval {
  Real lo;
  Real hi;
};

/// One polynomial piece on [lo, hi), coefficients in powers of (x - center)
/// where center is the midpoint of the piece.
struct PolyPiece {
  Real lo;
  Real hi;
  std::vector<Real> coeffs;

  Real center() const { return (lo + hi) / 2; }
};

struct DescriptorNode;

/// Immutable closed-form function descriptor.
///
/// Trees are built from a few leaves (Gaussian times polynomial, compact
/// polynomial bumps, piecewise polynomials) and structural wrappers
/// (translation, reflection, amplitude scaling, dilation, modulation, sums).
/// Every tree knows its support exactly; trees whose leaves are piecewise
/// polynomial also have exact moments and L2 norms.
///
/// Translation convention: translated(f, s)(x) = f(x - s).
class TestFunction {
 public:
  /// The zero function (an empty sum).
  TestFunction();

  static TestFunction gaussian_poly(Real center, Real width, std::vector<Real> coeffs);
  /// (x-a)^p (b-x)^p on (a, b), zero outside.  C^{p-1} on the real line.
  static TestFunction compact_bump(Real a, Real b, int p);
  /// Pieces must be ordered and non-overlapping; `origin` gives the
  /// expansion point of each coefficient list (typically the piece start).
  static TestFunction piecewise_poly(const std::vector<Interval>& intervals,
                                     const std::vector<std::vector<Real>>& coeffs,
                                     const std::vector<Real>& origins);
  /// Pieces already in midpoint-centred form with a known smoothness order.
  static TestFunction from_pieces(std::vector<PolyPiece> pieces, int smoothness);
  static TestFunction translated(TestFunction inner, Real shift);
  static TestFunction mirrored(TestFunction inner);
  static TestFunction scaled(TestFunction inner, Real factor);
  /// dilated(f, d)(x) = f(x / d), d > 0.
  static TestFunction dilated(TestFunction inner, Real factor);
  /// modulated(f, w, theta)(x) = e^{i theta} e^{i w x} f(x).
  static TestFunction modulated(TestFunction inner, Real frequency, Real phase);
  static TestFunction sum(std::vector<TestFunction> terms);

  RealComplex evaluate_exact(Real x) const;
  cplx evaluate(double x) const;

  /// Closed-form k-th derivative.  Throws CapabilityError when k exceeds the
  /// smoothness budget.
  TestFunction derivative(int k) const;

  /// Largest derivative order available (large for Gaussian leaves).
  int smoothness() const;

  /// Support as a sorted union of disjoint intervals; infinite endpoints for
  /// Gaussian leaves.  Empty for the zero function.
  std::vector<Interval> support() const;

  /// Points where the descriptor may fail to be analytic (piece boundaries).
  std::vector<Real> breakpoints() const;

  /// Exact integral of x^n f(x).  Throws CapabilityError for Gaussian or
  /// modulated leaves.
  Real exact_moment(int n) const;

  /// Exact integral of |f|^2 for piecewise-polynomial trees whose sum terms
  /// have pairwise disjoint supports.
  Real exact_l2_norm_sq() const;

  bool is_zero() const;
  const DescriptorNode& node() const { return *node_; }

 private:
  explicit TestFunction(std::shared_ptr<const DescriptorNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const DescriptorNode> node_;
};

namespace desc {
struct GaussianPoly {
  Real center;
  Real width;
  std::vector<Real> coeffs;  // powers of (x - center)
};
struct CompactBump {
  Real a;
  Real b;
  int p;
  std::vector<Real> coeffs;  // expansion in powers of (x - (a+b)/2)
};
struct PiecewisePoly {
  std::vector<PolyPiece> pieces;
  int smoothness;
};
struct Translated {
  TestFunction inner;
  Real shift;
};
struct Mirrored {
  TestFunction inner;
};
struct Scaled {
  TestFunction inner;
  Real factor;
};
struct Dilated {
  TestFunction inner;
  Real factor;
};
struct Modulated {
  TestFunction inner;
  Real frequency;
  Real phase;
};
struct Sum {
  std::vector<TestFunction> terms;
};
}  // namespace desc

struct DescriptorNode {
  std::variant<desc::GaussianPoly, desc::CompactBump, desc::PiecewisePoly, desc::Translated, desc::Mirrored,
               desc::Scaled, desc::Dilated, desc::Modulated, desc::Sum>
      value;
};

// Free-function spellings of the descriptor operations.
inline cplx evaluate(const TestFunction& tf, double x) { return tf.evaluate(x); }
inline TestFunction derivative(const TestFunction& tf, int k) { return tf.derivative(k); }
inline Real exact_moment(const TestFunction& tf, int n) { return tf.exact_moment(n); }

/// Pointwise samples on a grid.
SampledFunction sample(const TestFunction& tf, const GridSpec& grid);

/// Integral of |x|^n |f(x)| by composite Gauss-Legendre over the pieces of a
/// bounded support.  Used as the scale of relative moment defects.
Real l1_moment_mass(const TestFunction& tf, int n);

/// Relative moment defect |int x^n f| / int |x|^n |f|, computed in closed form.
Real exact_moment_defect(const TestFunction& tf, int n);

/// JSON form used by configuration files (tag + fields).
std::string to_json(const TestFunction& tf);
TestFunction test_function_from_json(const std::string& text);

}  // namespace whsg
