#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "whsg/grid.hpp"

namespace whsg {

/// Element (xi1, xi2, xi3) of the Weyl-Heisenberg group: translation,
/// modulation and central phase.
struct GroupElement {
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;

  bool operator==(const GroupElement&) const = default;
};

/// (a,b,c)(p,q,r) = (a+p, b+q, c+r+aq).
GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);

/// Lie algebra element a*chi1 + b*chi2 + c*chi3.
struct LieElement {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  bool operator==(const LieElement&) const = default;
};

/// [u, v] = (0, 0, u.a v.b - v.a u.b).
LieElement bracket(const LieElement& u, const LieElement& v);

enum class Semigroup { S1zero, S1, S2zero, S2, S3, S4 };

/// A subsemigroup, or with `inverse` set the semigroup of its inverses.
struct SemigroupId {
  Semigroup base = Semigroup::S1zero;
  bool inverse = false;
};

std::string to_string(SemigroupId id);
/// Accepts names such as "S1zero", "S4" and "S1^-1".
SemigroupId semigroup_from_string(const std::string& name);

bool in_semigroup(const GroupElement& x, SemigroupId id);

enum class ActMode { spectral, grid };

/// (U(xi) f)(x) = e^{i xi3} e^{i x xi2} f(x + xi1).  Spectral mode shifts by a
/// Fourier phase (periodic); grid mode shifts by whole samples with zero fill
/// and throws PrecisionError unless xi1 is a multiple of the spacing.
SampledFunction act(const GroupElement& x, const SampledFunction& f, ActMode mode = ActMode::spectral);

/// Multiple of the grid spacing nearest to `shift`.
double snap_to_grid(double shift, const GridSpec& grid);

/// M: multiplication by ix.  D: differentiation.  C: multiplication by i.
enum class GeneratorId { M, D, C };

std::string to_string(GeneratorId id);

SampledFunction generator_apply(GeneratorId id, const SampledFunction& f);

/// One-parameter subgroup generated by `id`: D along chi1, M along chi2, C
/// along chi3.
GroupElement generator_direction(GeneratorId id, double t);

struct ConvergencePoint {
  double t = 0.0;
  std::vector<double> errors;  // indexed by seminorm order
};

/// ||((U(t e) - I)/t - X) f||_n for each t and n = 0..max_order.
std::vector<ConvergencePoint> generator_convergence(GeneratorId id, const SampledFunction& f,
                                                    const std::vector<double>& t_list, int max_order);

/// Same seminorms for the Richardson-extrapolated quotient
/// 2 (U(t/2) - I)/(t/2) - (U(t) - I)/t, which is second order in t.
std::vector<double> generator_extrapolated_error(GeneratorId id, const SampledFunction& f, double t, int max_order);

/// (||U(xi) f||_n, (1 + xi1^2 + xi2^2)^{n/2} ||f||_n).
std::pair<double, double> norm_growth_check(const GroupElement& x, const SampledFunction& f, int n);

/// F U(xi) F^{-1} = U(conjugate_by_fourier(xi)).
GroupElement conjugate_by_fourier(const GroupElement& x);
/// F^{-1} U(xi) F = U(conjugate_by_inverse_fourier(xi)).
GroupElement conjugate_by_inverse_fourier(const GroupElement& x);

void to_json(nlohmann::json& j, const GroupElement& x);
void from_json(const nlohmann::json& j, GroupElement& x);

}  // namespace whsg
