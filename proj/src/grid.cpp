#include "whsg/grid.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "whsg/errors.hpp"

namespace whsg {

GridSpec GridSpec::make(double half_width, std::size_t size) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw ConfigError("grid half width must be positive and finite, got " + std::to_string(half_width));
  }
  if (size < 4 || !std::has_single_bit(size)) {
    throw ConfigError("grid size must be a power of two >= 4, got " + std::to_string(size));
  }
  return GridSpec(half_width, size, false);
}

GridSpec make_grid(double half_width, std::size_t size) { return GridSpec::make(half_width, size); }

double GridSpec::half_width() const {
  if (!is_dual_) return base_half_width_;
  return std::numbers::pi * static_cast<double>(size_) / (2.0 * base_half_width_);
}

std::vector<double> GridSpec::points() const {
  std::vector<double> xs(size_);
  for (std::size_t j = 0; j < size_; ++j) xs[j] = point(j);
  return xs;
}

GridSpec GridSpec::widened(std::size_t factor) const {
  if (factor == 0 || !std::has_single_bit(factor)) {
    throw ConfigError("widening factor must be a power of two");
  }
  if (is_dual_) return GridSpec(base_half_width_, size_ * factor, true);
  return GridSpec(base_half_width_ * static_cast<double>(factor), size_ * factor, false);
}

SampledFunction::SampledFunction(const GridSpec& grid) : grid_(grid), values_(grid.size()) {}

SampledFunction::SampledFunction(const GridSpec& grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw ShapeError("sample count " + std::to_string(values_.size()) + " does not match grid size " +
                     std::to_string(grid_.size()));
  }
}

SampledFunction SampledFunction::from(const GridSpec& grid, const std::function<cplx(double)>& fn) {
  std::vector<cplx> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) values[j] = fn(grid.point(j));
  return SampledFunction(grid, std::move(values));
}

void require_same_grid(const SampledFunction& a, const SampledFunction& b) {
  if (!(a.grid() == b.grid())) throw ShapeError("operands live on different grids");
}

SampledFunction& SampledFunction::operator+=(const SampledFunction& other) {
  require_same_grid(*this, other);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += other.values_[j];
  return *this;
}

SampledFunction& SampledFunction::operator-=(const SampledFunction& other) {
  require_same_grid(*this, other);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= other.values_[j];
  return *this;
}

SampledFunction& SampledFunction::operator*=(cplx scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

SampledFunction operator+(SampledFunction a, const SampledFunction& b) { return a += b; }
SampledFunction operator-(SampledFunction a, const SampledFunction& b) { return a -= b; }
SampledFunction operator*(cplx scalar, SampledFunction f) { return f *= scalar; }

cplx integrate(const SampledFunction& f) {
  cplx sum{};
  for (const auto& v : f.values()) sum += v;
  return f.grid().spacing() * sum;
}

cplx inner(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f, g);
  cplx sum{};
  for (std::size_t j = 0; j < f.size(); ++j) sum += std::conj(f[j]) * g[j];
  return f.grid().spacing() * sum;
}

double norm(const SampledFunction& f) {
  double sum = 0.0;
  for (const auto& v : f.values()) sum += std::norm(v);
  return std::sqrt(f.grid().spacing() * sum);
}

SampledFunction multiply_by(const SampledFunction& f, const std::function<cplx(double)>& fn) {
  SampledFunction out(f.grid());
  auto& values = out.mutable_values();
  for (std::size_t j = 0; j < f.size(); ++j) values[j] = f[j] * fn(f.grid().point(j));
  return out;
}

SampledFunction restrict_halfline(const SampledFunction& f, Side side) {
  SampledFunction out = f;
  auto& values = out.mutable_values();
  const std::size_t zero = f.grid().zero_index();
  if (side == Side::plus) {
    for (std::size_t j = 0; j < zero; ++j) values[j] = 0.0;
  } else {
    for (std::size_t j = zero; j < values.size(); ++j) values[j] = 0.0;
  }
  return out;
}

void write_csv(std::ostream& out, const SampledFunction& f) {
  out << "x,re,im\n";
  out.precision(17);
  for (std::size_t j = 0; j < f.size(); ++j) {
    out << f.grid().point(j) << ',' << f[j].real() << ',' << f[j].imag() << '\n';
  }
}

}  // namespace whsg
