#include "whsg/heisenberg.hpp"

#include <cmath>

#include "whsg/errors.hpp"
#include "whsg/schwartz.hpp"
#include "whsg/transforms.hpp"

namespace whsg {

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  return {x.xi1 + y.xi1, x.xi2 + y.xi2, x.xi3 + y.xi3 + x.xi1 * y.xi2};
}

GroupElement inverse(const GroupElement& x) { return {-x.xi1, -x.xi2, -x.xi3 + x.xi1 * x.xi2}; }

LieElement bracket(const LieElement& u, const LieElement& v) { return {0.0, 0.0, u.a * v.b - v.a * u.b}; }

std::string to_string(SemigroupId id) {
  static const char* names[] = {"S1zero", "S1", "S2zero", "S2", "S3", "S4"};
  std::string name = names[static_cast<int>(id.base)];
  return id.inverse ? name + "^-1" : name;
}

SemigroupId semigroup_from_string(const std::string& name) {
  SemigroupId id;
  std::string base = name;
  if (base.size() > 3 && base.ends_with("^-1")) {
    id.inverse = true;
    base.resize(base.size() - 3);
  }
  if (base == "S1zero") id.base = Semigroup::S1zero;
  else if (base == "S1") id.base = Semigroup::S1;
  else if (base == "S2zero") id.base = Semigroup::S2zero;
  else if (base == "S2") id.base = Semigroup::S2;
  else if (base == "S3") id.base = Semigroup::S3;
  else if (base == "S4") id.base = Semigroup::S4;
  else throw ConfigError("unknown semigroup '" + name + "'");
  return id;
}

bool in_semigroup(const GroupElement& x, SemigroupId id) {
  const GroupElement e = id.inverse ? inverse(x) : x;
  switch (id.base) {
    case Semigroup::S1zero:
      return e.xi1 >= 0 && e.xi2 == 0;
    case Semigroup::S1:
      return e.xi1 >= 0;
    case Semigroup::S2zero:
      return e.xi1 == 0 && e.xi2 >= 0;
    case Semigroup::S2:
      return e.xi2 >= 0;
    case Semigroup::S3:
      return e.xi1 >= 0 && e.xi2 >= 0;
    case Semigroup::S4:
      return e.xi1 >= 0 && e.xi2 >= 0 && e.xi1 * e.xi2 >= e.xi3 && e.xi3 >= 0;
  }
  return false;
}

double snap_to_grid(double shift, const GridSpec& grid) {
  return std::nearbyint(shift / grid.spacing()) * grid.spacing();
}

namespace {

SampledFunction grid_shift(const SampledFunction& f, double shift) {
  const double dx = f.grid().spacing();
  const double steps = std::nearbyint(shift / dx);
  if (std::fabs(shift - steps * dx) > 1e-9 * dx) {
    throw PrecisionError("grid translation " + std::to_string(shift) + " is not a multiple of the spacing " +
                         std::to_string(dx));
  }
  const auto m = static_cast<std::ptrdiff_t>(steps);
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  SampledFunction out(f.grid());
  auto& values = out.mutable_values();
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const std::ptrdiff_t src = j + m;
    if (src >= 0 && src < n) values[static_cast<std::size_t>(j)] = f[static_cast<std::size_t>(src)];
  }
  return out;
}

}  // namespace

SampledFunction act(const GroupElement& x, const SampledFunction& f, ActMode mode) {
  SampledFunction out = f;
  if (x.xi1 != 0.0) out = mode == ActMode::spectral ? spectral_translate(f, -x.xi1) : grid_shift(f, x.xi1);
  if (x.xi2 == 0.0 && x.xi3 == 0.0) return out;
  auto& values = out.mutable_values();
  for (std::size_t j = 0; j < values.size(); ++j) {
    values[j] *= std::polar(1.0, x.xi3 + x.xi2 * f.grid().point(j));
  }
  return out;
}

std::string to_string(GeneratorId id) {
  switch (id) {
    case GeneratorId::M:
      return "M";
    case GeneratorId::D:
      return "D";
    case GeneratorId::C:
      return "C";
  }
  return "?";
}

SampledFunction generator_apply(GeneratorId id, const SampledFunction& f) {
  switch (id) {
    case GeneratorId::M:
      return multiply_by(f, [](double x) { return cplx(0.0, x); });
    case GeneratorId::D:
      return spectral_derivative(f, 1);
    case GeneratorId::C:
      return cplx(0.0, 1.0) * f;
  }
  return f;
}

GroupElement generator_direction(GeneratorId id, double t) {
  switch (id) {
    case GeneratorId::D:
      return {t, 0.0, 0.0};
    case GeneratorId::M:
      return {0.0, t, 0.0};
    case GeneratorId::C:
      return {0.0, 0.0, t};
  }
  return {};
}

namespace {

SampledFunction difference_quotient(GeneratorId id, const SampledFunction& f, double t) {
  SampledFunction q = act(generator_direction(id, t), f, ActMode::spectral) - f;
  q *= 1.0 / t;
  return q;
}

std::vector<double> seminorms_up_to(const SampledFunction& f, int max_order) {
  SeminormConfig config{max_order};
  std::vector<double> out;
  for (int n = 0; n <= max_order; ++n) out.push_back(seminorm_iter(f, n, config));
  return out;
}

}  // namespace

std::vector<ConvergencePoint> generator_convergence(GeneratorId id, const SampledFunction& f,
                                                    const std::vector<double>& t_list, int max_order) {
  const SampledFunction target = generator_apply(id, f);
  std::vector<ConvergencePoint> out;
  for (double t : t_list) {
    if (!(t > 0.0)) throw ConfigError("generator step sizes must be positive");
    out.push_back({t, seminorms_up_to(difference_quotient(id, f, t) - target, max_order)});
  }
  return out;
}

std::vector<double> generator_extrapolated_error(GeneratorId id, const SampledFunction& f, double t, int max_order) {
  if (!(t > 0.0)) throw ConfigError("generator step size must be positive");
  SampledFunction extrapolated = 2.0 * difference_quotient(id, f, t / 2) - difference_quotient(id, f, t);
  return seminorms_up_to(extrapolated - generator_apply(id, f), max_order);
}

std::pair<double, double> norm_growth_check(const GroupElement& x, const SampledFunction& f, int n) {
  const SeminormConfig config{std::max(n, 0)};
  const double lhs = seminorm_iter(act(x, f, ActMode::spectral), n, config);
  const double factor = std::pow(1.0 + x.xi1 * x.xi1 + x.xi2 * x.xi2, 0.5 * n);
  return {lhs, factor * seminorm_iter(f, n, config)};
}

GroupElement conjugate_by_fourier(const GroupElement& x) { return {-x.xi2, x.xi1, x.xi3 - x.xi1 * x.xi2}; }

GroupElement conjugate_by_inverse_fourier(const GroupElement& x) { return {x.xi2, -x.xi1, x.xi3 - x.xi1 * x.xi2}; }

void to_json(nlohmann::json& j, const GroupElement& x) { j = nlohmann::json::array({x.xi1, x.xi2, x.xi3}); }

void from_json(const nlohmann::json& j, GroupElement& x) {
  if (!j.is_array() || j.size() != 3) throw ConfigError("group element must be an array [xi1, xi2, xi3]");
  x = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace whsg
