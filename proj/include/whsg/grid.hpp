#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace whsg {

using cplx = std::complex<double>;

enum class Side { plus, minus };

/// Uniform periodic grid x_j = (j - N/2) * dx on [-L, L).
///
/// Every grid has an exact Fourier dual: the frequency grid with half width
/// pi/dx and the same size.  A grid remembers whether it is a dual so that
/// dual().dual() reproduces the original bit for bit.
class GridSpec {
 public:
  /// Validates L > 0 and N a power of two with N >= 4.
  static GridSpec make(double half_width, std::size_t size);

  double half_width() const;
  std::size_t size() const { return size_; }
  double spacing() const { return 2.0 * half_width() / static_cast<double>(size_); }

  double point(std::size_t j) const {
    return (static_cast<double>(j) - static_cast<double>(size_ / 2)) * spacing();
  }
  std::vector<double> points() const;

  /// Index of the grid point x = 0.
  std::size_t zero_index() const { return size_ / 2; }

  GridSpec dual() const { return GridSpec(base_half_width_, size_, !is_dual_); }
  bool is_dual() const { return is_dual_; }

  /// Same grid with the size multiplied by `factor` and the spacing kept.
  GridSpec widened(std::size_t factor) const;

  bool operator==(const GridSpec& other) const = default;

 private:
  GridSpec(double base, std::size_t n, bool dual) : base_half_width_(base), size_(n), is_dual_(dual) {}

  double base_half_width_;
  std::size_t size_;
  bool is_dual_;
};

GridSpec make_grid(double half_width, std::size_t size);

/// Complex samples of a function on a GridSpec.
class SampledFunction {
 public:
  explicit SampledFunction(const GridSpec& grid);
  SampledFunction(const GridSpec& grid, std::vector<cplx> values);

  /// Samples fn(x_j) at every grid point.
  static SampledFunction from(const GridSpec& grid, const std::function<cplx(double)>& fn);

  const GridSpec& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  std::span<const cplx> values() const { return values_; }
  const cplx& operator[](std::size_t j) const { return values_[j]; }

  /// Mutable access for builders; the grid itself is fixed.
  std::vector<cplx>& mutable_values() { return values_; }

  SampledFunction& operator+=(const SampledFunction& other);
  SampledFunction& operator-=(const SampledFunction& other);
  SampledFunction& operator*=(cplx scalar);

 private:
  GridSpec grid_;
  std::vector<cplx> values_;
};

SampledFunction operator+(SampledFunction a, const SampledFunction& b);
SampledFunction operator-(SampledFunction a, const SampledFunction& b);
SampledFunction operator*(cplx scalar, SampledFunction f);

/// Throws ShapeError unless both functions live on the same grid.
void require_same_grid(const SampledFunction& a, const SampledFunction& b);

/// Periodic rectangle rule: dx * sum_j f_j.
cplx integrate(const SampledFunction& f);

/// dx * sum_j conj(f_j) g_j.
cplx inner(const SampledFunction& f, const SampledFunction& g);
double norm(const SampledFunction& f);

/// Pointwise product with a function of x.
SampledFunction multiply_by(const SampledFunction& f, const std::function<cplx(double)>& fn);

/// Keeps samples with x >= 0 (plus) or x < 0 (minus); zero elsewhere.
SampledFunction restrict_halfline(const SampledFunction& f, Side side);

/// Writes "x,re,im" rows with a header line.
void write_csv(std::ostream& out, const SampledFunction& f);

}  // namespace whsg
