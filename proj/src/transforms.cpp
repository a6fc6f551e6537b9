#include "whsg/transforms.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "whsg/errors.hpp"

namespace whsg {
namespace {

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    auto* in = fftw_alloc_complex(n);
    auto* out = fftw_alloc_complex(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

void run_dft(std::vector<cplx>& in, std::vector<cplx>& out, int sign) {
  fftw_plan plan = plan_cache().get(in.size(), sign);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()), reinterpret_cast<fftw_complex*>(out.data()));
}

/// Shared kernel of both directions; the grid centring turns the continuous
/// phase into alternating signs on both sides (N divisible by 4).
SampledFunction centred_transform(const SampledFunction& f, int sign) {
  const std::size_t n = f.size();
  std::vector<cplx> in(f.values().begin(), f.values().end());
  for (std::size_t j = 1; j < n; j += 2) in[j] = -in[j];
  std::vector<cplx> out(n);
  run_dft(in, out, sign);
  const double scale = f.grid().spacing() / std::sqrt(2.0 * std::numbers::pi);
  for (std::size_t k = 0; k < n; ++k) out[k] *= (k % 2 == 0) ? scale : -scale;
  return SampledFunction(f.grid().dual(), std::move(out));
}

double sgn(double y) { return static_cast<double>((y > 0) - (y < 0)); }

SampledFunction zero_pad(const SampledFunction& f, std::size_t factor) {
  SampledFunction out(f.grid().widened(factor));
  const std::size_t offset = (out.size() - f.size()) / 2;
  auto& values = out.mutable_values();
  for (std::size_t j = 0; j < f.size(); ++j) values[offset + j] = f[j];
  return out;
}

SampledFunction crop(const SampledFunction& wide, const GridSpec& grid) {
  const std::size_t offset = (wide.size() - grid.size()) / 2;
  std::vector<cplx> values(wide.values().begin() + static_cast<std::ptrdiff_t>(offset),
                           wide.values().begin() + static_cast<std::ptrdiff_t>(offset + grid.size()));
  return SampledFunction(grid, std::move(values));
}

SampledFunction principal_value_hilbert(const SampledFunction& f) {
  const std::size_t n = f.size();
  const auto at = [&](std::ptrdiff_t j) -> cplx {
    return (j < 0 || j >= static_cast<std::ptrdiff_t>(n)) ? cplx{} : f[static_cast<std::size_t>(j)];
  };
  SampledFunction out(f.grid());
  auto& values = out.mutable_values();
  for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(n); ++t) {
    cplx acc{};
    for (std::ptrdiff_t m = static_cast<std::ptrdiff_t>(n); m >= 1; --m) {
      acc += (at(t - m) - at(t + m)) / static_cast<double>(m);
    }
    acc -= 0.5 * (at(t + 1) - at(t - 1));
    values[static_cast<std::size_t>(t)] = acc / std::numbers::pi;
  }
  return out;
}

}  // namespace

SampledFunction fourier(const SampledFunction& f) { return centred_transform(f, FFTW_FORWARD); }

SampledFunction inverse_fourier(const SampledFunction& f) { return centred_transform(f, FFTW_BACKWARD); }

SampledFunction apply_multiplier(const SampledFunction& f, const std::function<cplx(double)>& m,
                                 std::size_t padding) {
  if (padding == 0) throw ConfigError("padding factor must be positive");
  const SampledFunction work = padding == 1 ? f : zero_pad(f, padding);
  SampledFunction spectrum = fourier(work);
  auto& values = spectrum.mutable_values();
  for (std::size_t k = 0; k < values.size(); ++k) values[k] *= m(spectrum.grid().point(k));
  SampledFunction back = inverse_fourier(spectrum);
  return padding == 1 ? back : crop(back, f.grid());
}

SampledFunction hilbert(const SampledFunction& f, HilbertMethod method, std::size_t padding) {
  if (method == HilbertMethod::principal_value) return principal_value_hilbert(f);
  return apply_multiplier(f, [](double y) { return cplx(0.0, -sgn(y)); }, padding);
}

SampledFunction proj_hardy(const SampledFunction& f, Side side) {
  const double s = side == Side::plus ? 1.0 : -1.0;
  return apply_multiplier(f, [s](double y) { return cplx(0.5 * (1.0 + s * sgn(y)), 0.0); });
}

SampledFunction spectral_translate(const SampledFunction& f, double shift) {
  return apply_multiplier(f, [shift](double y) { return std::polar(1.0, -y * shift); });
}

SampledFunction spectral_derivative(const SampledFunction& f, int order) {
  if (order < 0) throw ConfigError("derivative order must be non-negative");
  if (order == 0) return f;
  return apply_multiplier(f, [order](double y) {
    cplx m{1.0, 0.0};
    for (int i = 0; i < order; ++i) m *= cplx(0.0, y);
    return m;
  });
}

double hardy_defect(const SampledFunction& f, Side side) {
  const double total = norm(f);
  if (total == 0.0) return 0.0;
  return norm(proj_hardy(f, side == Side::plus ? Side::minus : Side::plus)) / total;
}

}  // namespace whsg
