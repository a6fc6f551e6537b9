#include "whsg/testfn.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "whsg/errors.hpp"

namespace whsg {
namespace {

constexpr int kSmoothForever = 1 << 20;

/// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(Real v) {
    const Real t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  Real value() const { return sum_ + comp_; }

 private:
  Real sum_ = 0;
  Real comp_ = 0;
};

Real binomial(int n, int k) {
  Real r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<Real>(n - k + i) / static_cast<Real>(i);
  return r;
}

Real horner(const std::vector<Real>& c, Real s) {
  Real r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * s + *it;
  return r;
}

std::vector<Real> poly_derivative(const std::vector<Real>& c) {
  if (c.size() <= 1) return {};
  std::vector<Real> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = static_cast<Real>(i) * c[i];
  return out;
}

/// Coefficients of q(s) = p(s + delta).
std::vector<Real> poly_shift(std::vector<Real> a, Real delta) {
  const std::size_t n = a.size();
  if (n < 2 || delta == 0) return a;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) a[j] += delta * a[j + 1];
  }
  return a;
}

std::vector<Real> poly_mul(const std::vector<Real>& a, const std::vector<Real>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Real> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Integral of s^m over [-h, h].
Real symmetric_power_integral(int m, Real h) {
  if (m % 2 != 0) return 0;
  return 2 * std::pow(h, static_cast<Real>(m + 1)) / static_cast<Real>(m + 1);
}

/// Integral of x^n q(x - c) over [c - h, c + h].
Real centered_poly_moment(const std::vector<Real>& q, Real c, Real h, int n) {
  CompensatedSum acc;
  for (int j = 0; j <= n; ++j) {
    const Real weight = binomial(n, j) * (n - j == 0 ? Real(1) : std::pow(c, static_cast<Real>(n - j)));
    if (weight == 0) continue;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if ((static_cast<int>(i) + j) % 2 != 0) continue;
      acc.add(weight * q[i] * symmetric_power_integral(static_cast<int>(i) + j, h));
    }
  }
  return acc.value();
}

Real centered_poly_l2_sq(const std::vector<Real>& q, Real h) {
  const auto sq = poly_mul(q, q);
  CompensatedSum acc;
  for (std::size_t i = 0; i < sq.size(); i += 2) acc.add(sq[i] * symmetric_power_integral(static_cast<int>(i), h));
  return acc.value();
}

std::vector<Real> bump_coefficients(Real a, Real b, int p) {
  // (x-a)^p (b-x)^p = (h^2 - s^2)^p with s = x - (a+b)/2.
  const Real h = (b - a) / 2;
  std::vector<Real> c(static_cast<std::size_t>(2 * p + 1), 0);
  for (int j = 0; j <= p; ++j) {
    const Real sign = (j % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(2 * j)] = sign * binomial(p, j) * std::pow(h * h, static_cast<Real>(p - j));
  }
  return c;
}

std::vector<Interval> merge_intervals(std::vector<Interval> v) {
  std::sort(v.begin(), v.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  std::vector<Interval> out;
  for (const auto& iv : v) {
    if (!(iv.hi > iv.lo)) continue;
    if (!out.empty() && iv.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

/// Detects the continuity order of a piecewise polynomial including its
/// junctions with the zero function outside the pieces.
int detect_smoothness(const std::vector<PolyPiece>& pieces) {
  std::size_t degree = 0;
  for (const auto& p : pieces) degree = std::max(degree, p.coeffs.size());
  if (degree == 0) return kSmoothForever;
  const int max_order = static_cast<int>(degree);

  // Magnitude of the d-th derivative on each piece, for relative tolerances.
  std::vector<Real> scale(static_cast<std::size_t>(max_order + 1), 0);
  for (const auto& p : pieces) {
    const Real h = (p.hi - p.lo) / 2;
    auto c = p.coeffs;
    for (int d = 0; d <= max_order; ++d) {
      Real mag = 0;
      for (std::size_t i = 0; i < c.size(); ++i) mag += std::fabs(c[i]) * std::pow(h, static_cast<Real>(i));
      scale[static_cast<std::size_t>(d)] = std::max(scale[static_cast<std::size_t>(d)], mag);
      c = poly_derivative(c);
    }
  }

  struct Junction {
    Real x;
    const PolyPiece* left;
    const PolyPiece* right;
  };
  std::vector<Junction> junctions;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const bool joined_left = i > 0 && pieces[i - 1].hi == pieces[i].lo;
    if (!joined_left) junctions.push_back({pieces[i].lo, nullptr, &pieces[i]});
    const bool joined_right = i + 1 < pieces.size() && pieces[i + 1].lo == pieces[i].hi;
    junctions.push_back({pieces[i].hi, &pieces[i], joined_right ? &pieces[i + 1] : nullptr});
  }

  int smooth = max_order;
  for (const auto& jn : junctions) {
    auto lc = jn.left ? jn.left->coeffs : std::vector<Real>{};
    auto rc = jn.right ? jn.right->coeffs : std::vector<Real>{};
    for (int d = 0; d <= max_order; ++d) {
      const Real lv = jn.left ? horner(lc, jn.x - jn.left->center()) : 0;
      const Real rv = jn.right ? horner(rc, jn.x - jn.right->center()) : 0;
      const Real tol = 1e-9L * std::max(scale[static_cast<std::size_t>(d)], std::numeric_limits<Real>::min());
      if (std::fabs(lv - rv) > tol) {
        smooth = std::min(smooth, d - 1);
        break;
      }
      lc = poly_derivative(lc);
      rc = poly_derivative(rc);
    }
  }
  return smooth;
}

}  // namespace

TestFunction::TestFunction() : node_(std::make_shared<DescriptorNode>(DescriptorNode{desc::Sum{}})) {}

TestFunction TestFunction::gaussian_poly(Real center, Real width, std::vector<Real> coeffs) {
  if (!(width > 0)) throw ConfigError("gaussian_poly width must be positive");
  return TestFunction(std::make_shared<DescriptorNode>(
      DescriptorNode{desc::GaussianPoly{center, width, std::move(coeffs)}}));
}

TestFunction TestFunction::compact_bump(Real a, Real b, int p) {
  if (!(b > a)) throw ConfigError("compact_bump requires a < b");
  if (p < 1) throw ConfigError("compact_bump exponent must be >= 1");
  return TestFunction(std::make_shared<DescriptorNode>(
      DescriptorNode{desc::CompactBump{a, b, p, bump_coefficients(a, b, p)}}));
}

TestFunction TestFunction::piecewise_poly(const std::vector<Interval>& intervals,
                                          const std::vector<std::vector<Real>>& coeffs,
                                          const std::vector<Real>& origins) {
  if (intervals.size() != coeffs.size() || intervals.size() != origins.size()) {
    throw ConfigError("piecewise_poly: intervals, coefficient lists and origins differ in length");
  }
  std::vector<PolyPiece> pieces;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto& iv = intervals[i];
    if (!(iv.hi > iv.lo)) throw ConfigError("piecewise_poly: empty or reversed piece");
    if (i > 0 && iv.lo < intervals[i - 1].hi) throw ConfigError("piecewise_poly: pieces overlap or are unordered");
    PolyPiece piece{iv.lo, iv.hi, {}};
    piece.coeffs = poly_shift(coeffs[i], piece.center() - origins[i]);
    pieces.push_back(std::move(piece));
  }
  const int smooth = detect_smoothness(pieces);
  return from_pieces(std::move(pieces), smooth);
}

TestFunction TestFunction::from_pieces(std::vector<PolyPiece> pieces, int smoothness) {
  return TestFunction(std::make_shared<DescriptorNode>(
      DescriptorNode{desc::PiecewisePoly{std::move(pieces), std::max(smoothness, -1)}}));
}

TestFunction TestFunction::translated(TestFunction inner, Real shift) {
  if (!std::isfinite(shift)) throw ConfigError("translation must be finite");
  return TestFunction(std::make_shared<DescriptorNode>(DescriptorNode{desc::Translated{std::move(inner), shift}}));
}

TestFunction TestFunction::mirrored(TestFunction inner) {
  return TestFunction(std::make_shared<DescriptorNode>(DescriptorNode{desc::Mirrored{std::move(inner)}}));
}

TestFunction TestFunction::scaled(TestFunction inner, Real factor) {
  if (!std::isfinite(factor)) throw ConfigError("amplitude factor must be finite");
  return TestFunction(std::make_shared<DescriptorNode>(DescriptorNode{desc::Scaled{std::move(inner), factor}}));
}

TestFunction TestFunction::dilated(TestFunction inner, Real factor) {
  if (!(factor > 0) || !std::isfinite(factor)) throw ConfigError("dilation factor must be positive and finite");
  return TestFunction(std::make_shared<DescriptorNode>(DescriptorNode{desc::Dilated{std::move(inner), factor}}));
}

TestFunction TestFunction::modulated(TestFunction inner, Real frequency, Real phase) {
  if (!std::isfinite(frequency) || !std::isfinite(phase)) throw ConfigError("modulation must be finite");
  return TestFunction(
      std::make_shared<DescriptorNode>(DescriptorNode{desc::Modulated{std::move(inner), frequency, phase}}));
}

TestFunction TestFunction::sum(std::vector<TestFunction> terms) {
  std::erase_if(terms, [](const TestFunction& t) { return t.is_zero(); });
  return TestFunction(std::make_shared<DescriptorNode>(DescriptorNode{desc::Sum{std::move(terms)}}));
}

// ---------------------------------------------------------------------------
// Evaluation

RealComplex TestFunction::evaluate_exact(Real x) const {
  return std::visit(
      Overloaded{
          [&](const desc::GaussianPoly& g) -> RealComplex {
            const Real t = x - g.center;
            return horner(g.coeffs, t) * std::exp(-t * t / (2 * g.width * g.width));
          },
          [&](const desc::CompactBump& b) -> RealComplex {
            if (!(x > b.a && x < b.b)) return 0;
            return horner(b.coeffs, x - (b.a + b.b) / 2);
          },
          [&](const desc::PiecewisePoly& pw) -> RealComplex {
            auto it = std::upper_bound(pw.pieces.begin(), pw.pieces.end(), x,
                                       [](Real v, const PolyPiece& p) { return v < p.lo; });
            if (it == pw.pieces.begin()) return 0;
            --it;
            if (!(x < it->hi)) return 0;
            return horner(it->coeffs, x - it->center());
          },
          [&](const desc::Translated& t) { return t.inner.evaluate_exact(x - t.shift); },
          [&](const desc::Mirrored& m) { return m.inner.evaluate_exact(-x); },
          [&](const desc::Scaled& s) { return s.factor * s.inner.evaluate_exact(x); },
          [&](const desc::Dilated& d) { return d.inner.evaluate_exact(x / d.factor); },
          [&](const desc::Modulated& m) {
            return std::polar(Real(1), m.phase + m.frequency * x) * m.inner.evaluate_exact(x);
          },
          [&](const desc::Sum& s) {
            RealComplex acc = 0;
            for (const auto& t : s.terms) acc += t.evaluate_exact(x);
            return acc;
          },
      },
      node_->value);
}

cplx TestFunction::evaluate(double x) const {
  const RealComplex v = evaluate_exact(static_cast<Real>(x));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

bool TestFunction::is_zero() const {
  return std::visit(
      Overloaded{
          [](const desc::GaussianPoly& g) {
            return std::all_of(g.coeffs.begin(), g.coeffs.end(), [](Real c) { return c == 0; });
          },
          [](const desc::CompactBump&) { return false; },
          [](const desc::PiecewisePoly& pw) {
            return std::all_of(pw.pieces.begin(), pw.pieces.end(), [](const PolyPiece& p) {
              return std::all_of(p.coeffs.begin(), p.coeffs.end(), [](Real c) { return c == 0; });
            });
          },
          [](const desc::Translated& t) { return t.inner.is_zero(); },
          [](const desc::Mirrored& m) { return m.inner.is_zero(); },
          [](const desc::Scaled& s) { return s.factor == 0 || s.inner.is_zero(); },
          [](const desc::Dilated& d) { return d.inner.is_zero(); },
          [](const desc::Modulated& m) { return m.inner.is_zero(); },
          [](const desc::Sum& s) {
            return std::all_of(s.terms.begin(), s.terms.end(), [](const TestFunction& t) { return t.is_zero(); });
          },
      },
      node_->value);
}

// ---------------------------------------------------------------------------
// Derivatives

int TestFunction::smoothness() const {
  return std::visit(Overloaded{
                        [](const desc::GaussianPoly&) { return kSmoothForever; },
                        [](const desc::CompactBump& b) { return b.p - 1; },
                        [](const desc::PiecewisePoly& pw) { return pw.smoothness; },
                        [](const desc::Translated& t) { return t.inner.smoothness(); },
                        [](const desc::Mirrored& m) { return m.inner.smoothness(); },
                        [](const desc::Scaled& s) { return s.inner.smoothness(); },
                        [](const desc::Dilated& d) { return d.inner.smoothness(); },
                        [](const desc::Modulated& m) { return m.inner.smoothness(); },
                        [](const desc::Sum& s) {
                          int r = kSmoothForever;
                          for (const auto& t : s.terms) r = std::min(r, t.smoothness());
                          return r;
                        },
                    },
                    node_->value);
}

namespace {

TestFunction first_derivative(const TestFunction& f);

TestFunction piecewise_derivative(const std::vector<PolyPiece>& pieces, int smoothness) {
  std::vector<PolyPiece> out;
  out.reserve(pieces.size());
  for (const auto& p : pieces) out.push_back({p.lo, p.hi, poly_derivative(p.coeffs)});
  const int next = smoothness >= kSmoothForever ? kSmoothForever : smoothness - 1;
  return TestFunction::from_pieces(std::move(out), next);
}

TestFunction first_derivative(const TestFunction& f) {
  using TF = TestFunction;
  return std::visit(
      Overloaded{
          [](const desc::GaussianPoly& g) {
            // d/dx [q(t) e^{-t^2/2w^2}] = (q'(t) - t q(t) / w^2) e^{-t^2/2w^2}.
            auto dq = poly_derivative(g.coeffs);
            std::vector<Real> out(g.coeffs.size() + 1, 0);
            for (std::size_t i = 0; i < dq.size(); ++i) out[i] += dq[i];
            for (std::size_t i = 0; i < g.coeffs.size(); ++i) out[i + 1] -= g.coeffs[i] / (g.width * g.width);
            return TF::gaussian_poly(g.center, g.width, std::move(out));
          },
          [](const desc::CompactBump& b) {
            return piecewise_derivative({PolyPiece{b.a, b.b, b.coeffs}}, b.p - 1);
          },
          [](const desc::PiecewisePoly& pw) { return piecewise_derivative(pw.pieces, pw.smoothness); },
          [](const desc::Translated& t) { return TF::translated(first_derivative(t.inner), t.shift); },
          [](const desc::Mirrored& m) { return TF::scaled(TF::mirrored(first_derivative(m.inner)), -1); },
          [](const desc::Scaled& s) { return TF::scaled(first_derivative(s.inner), s.factor); },
          [](const desc::Dilated& d) {
            return TF::scaled(TF::dilated(first_derivative(d.inner), d.factor), 1 / d.factor);
          },
          [](const desc::Modulated& m) {
            const Real quarter = std::numbers::pi_v<Real> / 2;
            return TF::sum({TF::modulated(first_derivative(m.inner), m.frequency, m.phase),
                            TF::scaled(TF::modulated(m.inner, m.frequency, m.phase + quarter), m.frequency)});
          },
          [](const desc::Sum& s) {
            std::vector<TF> terms;
            terms.reserve(s.terms.size());
            for (const auto& t : s.terms) terms.push_back(first_derivative(t));
            return TF::sum(std::move(terms));
          },
      },
      f.node().value);
}

}  // namespace

TestFunction TestFunction::derivative(int k) const {
  if (k < 0) throw ConfigError("derivative order must be non-negative");
  if (k == 0) return *this;
  const int budget = smoothness();
  if (k > budget) {
    throw CapabilityError("derivative of order " + std::to_string(k) + " exceeds smoothness " +
                          std::to_string(budget));
  }
  TestFunction out = *this;
  for (int i = 0; i < k; ++i) out = first_derivative(out);
  return out;
}

// ---------------------------------------------------------------------------
// Support and breakpoints

std::vector<Interval> TestFunction::support() const {
  constexpr Real inf = std::numeric_limits<Real>::infinity();
  if (is_zero()) return {};
  return std::visit(
      Overloaded{
          [&](const desc::GaussianPoly&) { return std::vector<Interval>{{-inf, inf}}; },
          [](const desc::CompactBump& b) { return std::vector<Interval>{{b.a, b.b}}; },
          [](const desc::PiecewisePoly& pw) {
            std::vector<Interval> v;
            for (const auto& p : pw.pieces) {
              if (std::any_of(p.coeffs.begin(), p.coeffs.end(), [](Real c) { return c != 0; })) {
                v.push_back({p.lo, p.hi});
              }
            }
            return merge_intervals(std::move(v));
          },
          [](const desc::Translated& t) {
            auto v = t.inner.support();
            for (auto& iv : v) iv = {iv.lo + t.shift, iv.hi + t.shift};
            return v;
          },
          [](const desc::Mirrored& m) {
            auto v = m.inner.support();
            for (auto& iv : v) iv = {-iv.hi, -iv.lo};
            return merge_intervals(std::move(v));
          },
          [](const desc::Scaled& s) { return s.inner.support(); },
          [](const desc::Dilated& d) {
            auto v = d.inner.support();
            for (auto& iv : v) iv = {iv.lo * d.factor, iv.hi * d.factor};
            return v;
          },
          [](const desc::Modulated& m) { return m.inner.support(); },
          [](const desc::Sum& s) {
            std::vector<Interval> v;
            for (const auto& t : s.terms) {
              auto part = t.support();
              v.insert(v.end(), part.begin(), part.end());
            }
            return merge_intervals(std::move(v));
          },
      },
      node_->value);
}

std::vector<Real> TestFunction::breakpoints() const {
  std::vector<Real> out = std::visit(
      Overloaded{
          [](const desc::GaussianPoly&) { return std::vector<Real>{}; },
          [](const desc::CompactBump& b) { return std::vector<Real>{b.a, b.b}; },
          [](const desc::PiecewisePoly& pw) {
            std::vector<Real> v;
            for (const auto& p : pw.pieces) {
              v.push_back(p.lo);
              v.push_back(p.hi);
            }
            return v;
          },
          [](const desc::Translated& t) {
            auto v = t.inner.breakpoints();
            for (auto& x : v) x += t.shift;
            return v;
          },
          [](const desc::Mirrored& m) {
            auto v = m.inner.breakpoints();
            for (auto& x : v) x = -x;
            return v;
          },
          [](const desc::Scaled& s) { return s.inner.breakpoints(); },
          [](const desc::Dilated& d) {
            auto v = d.inner.breakpoints();
            for (auto& x : v) x *= d.factor;
            return v;
          },
          [](const desc::Modulated& m) { return m.inner.breakpoints(); },
          [](const desc::Sum& s) {
            std::vector<Real> v;
            for (const auto& t : s.terms) {
              auto part = t.breakpoints();
              v.insert(v.end(), part.begin(), part.end());
            }
            return v;
          },
      },
      node_->value);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Exact integrals

Real TestFunction::exact_moment(int n) const {
  if (n < 0) throw ConfigError("moment order must be non-negative");
  const Real value = std::visit(
      Overloaded{
          [](const desc::GaussianPoly&) -> Real {
            throw CapabilityError("exact moments are not available for Gaussian leaves");
          },
          [&](const desc::CompactBump& b) { return centered_poly_moment(b.coeffs, (b.a + b.b) / 2, (b.b - b.a) / 2, n); },
          [&](const desc::PiecewisePoly& pw) {
            CompensatedSum acc;
            for (const auto& p : pw.pieces) acc.add(centered_poly_moment(p.coeffs, p.center(), (p.hi - p.lo) / 2, n));
            return acc.value();
          },
          [&](const desc::Translated& t) {
            CompensatedSum acc;
            for (int j = 0; j <= n; ++j) {
              const Real w = binomial(n, j) * (n - j == 0 ? Real(1) : std::pow(t.shift, static_cast<Real>(n - j)));
              if (w != 0) acc.add(w * t.inner.exact_moment(j));
            }
            return acc.value();
          },
          [&](const desc::Mirrored& m) { return (n % 2 == 0 ? 1 : -1) * m.inner.exact_moment(n); },
          [&](const desc::Scaled& s) { return s.factor == 0 ? Real(0) : s.factor * s.inner.exact_moment(n); },
          [&](const desc::Dilated& d) {
            return std::pow(d.factor, static_cast<Real>(n + 1)) * d.inner.exact_moment(n);
          },
          [](const desc::Modulated&) -> Real {
            throw CapabilityError("exact moments are not available for modulated descriptors");
          },
          [&](const desc::Sum& s) {
            CompensatedSum acc;
            for (const auto& t : s.terms) acc.add(t.exact_moment(n));
            return acc.value();
          },
      },
      node_->value);
  if (!std::isfinite(value)) throw CapabilityError("moment of order " + std::to_string(n) + " overflows");
  return value;
}

Real TestFunction::exact_l2_norm_sq() const {
  const Real value = std::visit(
      Overloaded{
          [](const desc::GaussianPoly&) -> Real {
            throw CapabilityError("exact L2 norms are not available for Gaussian leaves");
          },
          [](const desc::CompactBump& b) { return centered_poly_l2_sq(b.coeffs, (b.b - b.a) / 2); },
          [](const desc::PiecewisePoly& pw) {
            CompensatedSum acc;
            for (const auto& p : pw.pieces) acc.add(centered_poly_l2_sq(p.coeffs, (p.hi - p.lo) / 2));
            return acc.value();
          },
          [](const desc::Translated& t) { return t.inner.exact_l2_norm_sq(); },
          [](const desc::Mirrored& m) { return m.inner.exact_l2_norm_sq(); },
          [](const desc::Scaled& s) { return s.factor == 0 ? Real(0) : s.factor * s.factor * s.inner.exact_l2_norm_sq(); },
          [](const desc::Dilated& d) { return d.factor * d.inner.exact_l2_norm_sq(); },
          [](const desc::Modulated& m) { return m.inner.exact_l2_norm_sq(); },
          [](const desc::Sum& s) {
            std::vector<std::vector<Interval>> supports;
            for (const auto& t : s.terms) supports.push_back(t.support());
            for (std::size_t i = 0; i < supports.size(); ++i) {
              for (std::size_t j = i + 1; j < supports.size(); ++j) {
                for (const auto& a : supports[i]) {
                  for (const auto& b : supports[j]) {
                    if (a.lo < b.hi && b.lo < a.hi) {
                      throw CapabilityError("exact L2 norm needs sum terms with disjoint supports");
                    }
                  }
                }
              }
            }
            CompensatedSum acc;
            for (const auto& t : s.terms) acc.add(t.exact_l2_norm_sq());
            return acc.value();
          },
      },
      node_->value);
  if (!std::isfinite(value)) throw CapabilityError("L2 norm overflows");
  return value;
}

// ---------------------------------------------------------------------------
// Free functions

SampledFunction sample(const TestFunction& tf, const GridSpec& grid) {
  return SampledFunction::from(grid, [&](double x) { return tf.evaluate(x); });
}

Real l1_moment_mass(const TestFunction& tf, int n) {
  if (n < 0) throw ConfigError("moment order must be non-negative");
  const auto supp = tf.support();
  if (supp.empty()) return 0;
  if (!std::isfinite(supp.front().lo) || !std::isfinite(supp.back().hi)) {
    throw CapabilityError("L1 moment mass needs a bounded support");
  }
  auto cuts = tf.breakpoints();
  for (const auto& iv : supp) {
    cuts.push_back(iv.lo);
    cuts.push_back(iv.hi);
  }
  cuts.push_back(0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  using Rule = boost::math::quadrature::gauss<Real, 20>;
  constexpr int kSubdivisions = 8;
  auto integrand = [&](Real x) {
    const Real weight = n == 0 ? Real(1) : std::pow(std::fabs(x), static_cast<Real>(n));
    return weight * std::abs(tf.evaluate_exact(x));
  };
  CompensatedSum acc;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Real lo = cuts[i];
    const Real hi = cuts[i + 1];
    const Real mid = (lo + hi) / 2;
    const bool inside = std::any_of(supp.begin(), supp.end(), [&](const Interval& iv) { return iv.lo <= mid && mid <= iv.hi; });
    if (!inside) continue;
    const Real step = (hi - lo) / kSubdivisions;
    for (int s = 0; s < kSubdivisions; ++s) {
      const Real a = lo + s * step;
      const Real b = s + 1 == kSubdivisions ? hi : a + step;
      acc.add(Rule::integrate(integrand, a, b));
    }
  }
  return acc.value();
}

Real exact_moment_defect(const TestFunction& tf, int n) {
  const Real mass = l1_moment_mass(tf, n);
  if (mass == 0) return 0;
  return std::fabs(tf.exact_moment(n)) / mass;
}

}  // namespace whsg
