#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>

#include "whsg/annihilator.hpp"
#include "whsg/errors.hpp"
#include "whsg/heisenberg.hpp"
#include "whsg/runner.hpp"
#include "whsg/transforms.hpp"

namespace py = pybind11;
using namespace whsg;

namespace {

using Triple = std::tuple<double, double, double>;

GroupElement element(const Triple& t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }
Triple triple(const GroupElement& g) { return {g.xi1, g.xi2, g.xi3}; }

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

/// Samples on the grid of half width L, or on its Fourier dual.
SampledFunction from_array(py::array_t<cplx, py::array::c_style | py::array::forcecast> values, double half_width,
                           bool dual = false) {
  if (values.ndim() != 1) throw ShapeError("expected a one-dimensional array");
  GridSpec grid = GridSpec::make(half_width, static_cast<std::size_t>(values.size()));
  if (dual) grid = grid.dual();
  const cplx* first = values.data();
  return SampledFunction(grid, std::vector<cplx>(first, first + values.size()));
}

py::array_t<cplx> to_array(const SampledFunction& f) {
  const auto v = f.values();
  py::array_t<cplx> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

SuiteConfig make_config(const std::string& suite, std::uint64_t seed, std::optional<std::size_t> grid_size,
                        std::optional<double> half_width, const std::map<std::string, double>& tolerances,
                        int max_moment, double epsilon) {
  SuiteConfig c;
  c.suite = suite;
  c.seed = seed;
  c.grid_size = grid_size;
  c.half_width = half_width;
  c.tolerances = tolerances;
  c.max_moment = max_moment;
  c.epsilon = epsilon;
  return c;
}

}  // namespace

PYBIND11_MODULE(whsg, m) {
  m.doc() = "Weyl-Heisenberg semigroup numerics";
  m.attr("__version__") = WHSG_VERSION;

  // Translators are tried newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("suite_names", &suite_names);

  m.def(
      "run_suite",
      [](const std::string& suite, std::uint64_t seed, std::optional<std::size_t> grid_size,
         std::optional<double> half_width, const std::map<std::string, double>& tolerances, int max_moment,
         double epsilon) {
        const SuiteConfig c = make_config(suite, seed, grid_size, half_width, tolerances, max_moment, epsilon);
        ExperimentReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(c);
        }
        return to_python(to_json(r));
      },
      py::arg("suite"), py::arg("seed") = 1, py::arg("grid_size") = py::none(), py::arg("half_width") = py::none(),
      py::arg("tolerances") = std::map<std::string, double>{}, py::arg("max_moment") = 4, py::arg("epsilon") = 1e-2);

  m.def(
      "run_all",
      [](std::uint64_t seed) {
        SuiteConfig base;
        base.seed = seed;
        RunSummary s;
        {
          py::gil_scoped_release release;
          s = run_all(default_manifest(base));
        }
        return to_python(to_json(s));
      },
      py::arg("seed") = 1);

  m.def("multiply", [](const Triple& a, const Triple& b) { return triple(multiply(element(a), element(b))); });
  m.def("inverse", [](const Triple& a) { return triple(inverse(element(a))); });

  m.def(
      "fourier", [](py::array_t<cplx> v, double half_width) { return to_array(fourier(from_array(v, half_width))); },
      py::arg("values"), py::arg("half_width"));
  m.def(
      "inverse_fourier",
      [](py::array_t<cplx> v, double half_width) {
        return to_array(inverse_fourier(from_array(v, half_width, true)));
      },
      py::arg("values"), py::arg("half_width"));
  m.def(
      "hilbert", [](py::array_t<cplx> v, double half_width) { return to_array(hilbert(from_array(v, half_width))); },
      py::arg("values"), py::arg("half_width"));
  m.def(
      "act",
      [](const Triple& xi, py::array_t<cplx> v, double half_width) {
        return to_array(act(element(xi), from_array(v, half_width), ActMode::spectral));
      },
      py::arg("xi"), py::arg("values"), py::arg("half_width"));

  m.def(
      "annihilate",
      [](int K, double epsilon, int p) {
        AnnihilatorConfig c;
        c.K = K;
        c.epsilon = epsilon;
        c.mother = default_mother(p);
        return to_python(annihilator_report(annihilate(c), c));
      },
      py::arg("K") = 4, py::arg("epsilon") = 1e-2, py::arg("p") = 6);
}
