#pragma once

#include <complex>
#include <functional>

#include "whsg/grid.hpp"

namespace whsg {

/// Unitary Fourier transform f^(t) = (2 pi)^{-1/2} int f(x) e^{-ixt} dx on the
/// grid.  The result lives on grid().dual().
SampledFunction fourier(const SampledFunction& f);

/// Inverse of fourier(); maps a function on G.dual() back to G.
SampledFunction inverse_fourier(const SampledFunction& f);

/// Multiplies f^ by m(y) and transforms back.  With padding > 1 the input is
/// zero-extended to `padding` times its size before transforming and the
/// central part of the result is returned.
SampledFunction apply_multiplier(const SampledFunction& f, const std::function<cplx(double)>& m,
                                 std::size_t padding = 1);

enum class HilbertMethod { multiplier, principal_value };

/// Hilbert transform with frequency multiplier -i sgn(y), sgn(0) = 0.  The
/// principal-value route is a direct O(N^2) quadrature with a singular-cell
/// correction and treats values outside the grid as zero.
SampledFunction hilbert(const SampledFunction& f, HilbertMethod method = HilbertMethod::multiplier,
                        std::size_t padding = 1);

/// Hardy projections: multipliers (1 + sgn y)/2 (plus) and (1 - sgn y)/2
/// (minus), weight 1/2 each at y = 0.
SampledFunction proj_hardy(const SampledFunction& f, Side side);

/// translate(f, s)(x) = f(x - s) via the phase e^{-iys}; periodic wraparound.
SampledFunction spectral_translate(const SampledFunction& f, double shift);

/// k-th derivative by multiplying f^ with (iy)^k.
SampledFunction spectral_derivative(const SampledFunction& f, int order = 1);

/// Distance from the Hardy class on `side`: ||P_other f|| / ||f||.
double hardy_defect(const SampledFunction& f, Side side);

}  // namespace whsg
