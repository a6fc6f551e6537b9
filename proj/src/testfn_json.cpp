#include "whsg/testfn_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "whsg/errors.hpp"

namespace whsg {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

nlohmann::json reals_to_json(const std::vector<Real>& v) {
  auto out = nlohmann::json::array();
  for (Real x : v) out.push_back(real_to_json(x));
  return out;
}

std::vector<Real> reals_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ConfigError("expected an array of numbers");
  std::vector<Real> out;
  for (const auto& x : j) out.push_back(real_from_json(x));
  return out;
}

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ConfigError(std::string("descriptor is missing field '") + name + "'");
  return *it;
}

}  // namespace

nlohmann::json real_to_json(Real value) {
  const auto dmax = static_cast<Real>(std::numeric_limits<double>::max());
  const auto dmin = static_cast<Real>(std::numeric_limits<double>::min());
  const Real mag = std::fabs(value);
  if (std::isfinite(value) && mag <= dmax && (mag == 0 || mag >= dmin)) return static_cast<double>(value);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.21Lg", value);
  return std::string(buf);
}

Real real_from_json(const nlohmann::json& value) {
  if (value.is_number()) return static_cast<Real>(value.get<double>());
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    char* end = nullptr;
    const Real r = std::strtold(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw ConfigError("not a number: '" + s + "'");
    return r;
  }
  throw ConfigError("expected a number");
}

nlohmann::json descriptor_to_json(const TestFunction& tf) {
  using nlohmann::json;
  return std::visit(
      Overloaded{
          [](const desc::GaussianPoly& g) -> json {
            return {{"type", "gaussian_poly"},
                    {"center", real_to_json(g.center)},
                    {"width", real_to_json(g.width)},
                    {"coeffs", reals_to_json(g.coeffs)}};
          },
          [](const desc::CompactBump& b) -> json {
            return {{"type", "compact_bump"}, {"a", real_to_json(b.a)}, {"b", real_to_json(b.b)}, {"p", b.p}};
          },
          [](const desc::PiecewisePoly& pw) -> json {
            auto pieces = json::array();
            for (const auto& p : pw.pieces) {
              pieces.push_back({{"lo", real_to_json(p.lo)},
                                {"hi", real_to_json(p.hi)},
                                {"origin", real_to_json(p.center())},
                                {"coeffs", reals_to_json(p.coeffs)}});
            }
            return {{"type", "piecewise_poly"}, {"pieces", pieces}, {"smoothness", pw.smoothness}};
          },
          [](const desc::Translated& t) -> json {
            return {{"type", "translated"}, {"shift", real_to_json(t.shift)}, {"of", descriptor_to_json(t.inner)}};
          },
          [](const desc::Mirrored& m) -> json { return {{"type", "mirrored"}, {"of", descriptor_to_json(m.inner)}}; },
          [](const desc::Scaled& s) -> json {
            return {{"type", "scaled"}, {"factor", real_to_json(s.factor)}, {"of", descriptor_to_json(s.inner)}};
          },
          [](const desc::Dilated& d) -> json {
            return {{"type", "dilated"}, {"factor", real_to_json(d.factor)}, {"of", descriptor_to_json(d.inner)}};
          },
          [](const desc::Modulated& m) -> json {
            return {{"type", "modulated"},
                    {"frequency", real_to_json(m.frequency)},
                    {"phase", real_to_json(m.phase)},
                    {"of", descriptor_to_json(m.inner)}};
          },
          [](const desc::Sum& s) -> json {
            auto terms = json::array();
            for (const auto& t : s.terms) terms.push_back(descriptor_to_json(t));
            return {{"type", "sum"}, {"terms", terms}};
          },
      },
      tf.node().value);
}

TestFunction descriptor_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("descriptor must be a JSON object");
  const std::string type = field(j, "type").get<std::string>();
  if (type == "gaussian_poly") {
    return TestFunction::gaussian_poly(real_from_json(field(j, "center")), real_from_json(field(j, "width")),
                                       reals_from_json(field(j, "coeffs")));
  }
  if (type == "compact_bump") {
    return TestFunction::compact_bump(real_from_json(field(j, "a")), real_from_json(field(j, "b")),
                                      field(j, "p").get<int>());
  }
  if (type == "piecewise_poly") {
    std::vector<Interval> intervals;
    std::vector<std::vector<Real>> coeffs;
    std::vector<Real> origins;
    for (const auto& p : field(j, "pieces")) {
      const Real lo = real_from_json(field(p, "lo"));
      intervals.push_back({lo, real_from_json(field(p, "hi"))});
      coeffs.push_back(reals_from_json(field(p, "coeffs")));
      origins.push_back(p.contains("origin") ? real_from_json(p["origin"]) : lo);
    }
    auto tf = TestFunction::piecewise_poly(intervals, coeffs, origins);
    if (j.contains("smoothness")) {
      const int declared = j["smoothness"].get<int>();
      if (declared > tf.smoothness()) throw ConfigError("declared smoothness exceeds the detected one");
    }
    return tf;
  }
  if (type == "derivative") {
    return descriptor_from_json(field(j, "of")).derivative(field(j, "order").get<int>());
  }
  if (type == "translated") {
    return TestFunction::translated(descriptor_from_json(field(j, "of")), real_from_json(field(j, "shift")));
  }
  if (type == "mirrored") return TestFunction::mirrored(descriptor_from_json(field(j, "of")));
  if (type == "scaled") {
    return TestFunction::scaled(descriptor_from_json(field(j, "of")), real_from_json(field(j, "factor")));
  }
  if (type == "dilated") {
    return TestFunction::dilated(descriptor_from_json(field(j, "of")), real_from_json(field(j, "factor")));
  }
  if (type == "modulated") {
    return TestFunction::modulated(descriptor_from_json(field(j, "of")), real_from_json(field(j, "frequency")),
                                   j.contains("phase") ? real_from_json(j["phase"]) : Real(0));
  }
  if (type == "sum") {
    std::vector<TestFunction> terms;
    for (const auto& t : field(j, "terms")) terms.push_back(descriptor_from_json(t));
    return TestFunction::sum(std::move(terms));
  }
  throw ConfigError("unknown descriptor type '" + type + "'");
}

std::string to_json(const TestFunction& tf) { return descriptor_to_json(tf).dump(); }

TestFunction test_function_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed descriptor JSON: ") + e.what());
  }
  return descriptor_from_json(j);
}

}  // namespace whsg
