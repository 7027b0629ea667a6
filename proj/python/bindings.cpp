#include "fejer/bandwidth.hpp"
#include "fejer/deconv.hpp"
#include "fejer/estimators.hpp"
#include "fejer/harness.hpp"
#include "fejer/io.hpp"
#include "fejer/kernelmath.hpp"
#include "fejer/origin.hpp"
#include "fejer/simdist.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

namespace py = pybind11;
using namespace fejer;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<double> to_vector(const Array& a)
{
  const auto r = a.unchecked<1>();
  std::vector<double> out(static_cast<std::size_t>(r.shape(0)));
  for (py::ssize_t i = 0; i < r.shape(0); ++i)
    out[static_cast<std::size_t>(i)] = r(i);
  return out;
}

py::array_t<double> to_array(const std::vector<double>& v)
{
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

AngleSample make_sample(const Array& angles, const std::optional<Array>& weights)
{
  const auto x = to_vector(angles);
  if (!weights)
    return AngleSample(x);
  return AngleSample(x, to_vector(*weights));
}

// int -> uniform grid of that size, array -> as given
std::vector<double> make_grid(const py::object& grid)
{
  if (grid.is_none())
    return uniform_grid(512);
  if (py::isinstance<py::int_>(grid))
    return uniform_grid(grid.cast<std::size_t>());
  return to_vector(grid.cast<Array>());
}

py::tuple grid_result(const EstimateGrid& g)
{
  return py::make_tuple(to_array(g.theta), to_array(g.values));
}

py::dict bandwidth_dict(const BandwidthResult& r)
{
  py::dict d;
  d["m"] = r.m.value();
  d["m_real"] = r.m_real;
  d["theta_estimate"] = r.theta_estimate;
  d["degenerate"] = r.degenerate;
  if (r.target == BandwidthTarget::Cdf) {
    d["c"] = r.c;
    d["kappa_hat"] = r.kappa_hat;
  }
  if (r.target == BandwidthTarget::ClassicalWL)
    d["rho"] = r.rho;
  return d;
}

py::tuple deconv_result(const DeconvolutionEstimate& e)
{
  py::dict info;
  info["min_value"] = e.min_value;
  info["negative_points"] = e.negative_points;
  info["clipped"] = e.clipped;
  return py::make_tuple(to_array(e.grid.theta), to_array(e.grid.values), info);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Fejer kernel density and distribution estimation on the circle";

  py::register_exception<DegenerateSample>(m, "DegenerateSample", PyExc_ValueError);
  py::register_exception<InfeasibleDeconvolution>(m, "InfeasibleDeconvolution", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("fejer_kernel", py::vectorize([](int order, double s) { return fejer_kernel(FejerOrder(order), s); }),
        py::arg("m"), py::arg("s"));
  m.def("integrated_kernel",
        py::vectorize([](int order, double t) { return integrated_kernel(FejerOrder(order), t); }), py::arg("m"),
        py::arg("theta"));
  m.def(
    "kernel_moments",
    [](int order) {
      const auto k = kernel_moments_exact(FejerOrder(order));
      py::dict d;
      d["alpha"] = k.alpha;
      d["beta"] = k.beta;
      d["gamma3"] = k.gamma3;
      d["m4"] = k.m4;
      d["nu1"] = k.nu1;
      d["nu3"] = k.nu3;
      return d;
    },
    py::arg("m"));
  m.def("lambert_w0", &lambert_w0, py::arg("z"));

  m.def(
    "density",
    [](const Array& angles, int order, const py::object& grid, const std::optional<Array>& weights) {
      return grid_result(density_estimate(make_sample(angles, weights), FejerOrder(order), make_grid(grid)));
    },
    py::arg("angles"), py::arg("m"), py::arg("grid") = py::none(), py::arg("weights") = py::none(),
    "Fejer density estimate; returns (theta, values).");
  m.def(
    "cdf",
    [](const Array& angles, int order, double origin, const py::object& grid, const std::optional<Array>& weights) {
      return grid_result(cdf_estimate(make_sample(angles, weights), FejerOrder(order), origin, make_grid(grid)));
    },
    py::arg("angles"), py::arg("m"), py::arg("origin") = -kPi, py::arg("grid") = py::none(),
    py::arg("weights") = py::none(), "Distribution function estimate from `origin`; returns (theta, values).");

  m.def(
    "select_origin",
    [](const Array& angles, const std::optional<Array>& weights) {
      const auto r = select_origin(make_sample(angles, weights));
      py::dict d;
      d["theta0"] = r.theta0;
      d["criterion_min"] = r.criterion_min;
      d["criterion_max"] = r.criterion_max;
      d["arc"] = py::make_tuple(r.minimizing_arc.start, r.minimizing_arc.end);
      return d;
    },
    py::arg("angles"), py::arg("weights") = py::none());
  m.def(
    "criterion_cn",
    [](const Array& angles, double theta0, const std::optional<Array>& weights) {
      return criterion_cn(make_sample(angles, weights), theta0);
    },
    py::arg("angles"), py::arg("theta0"), py::arg("weights") = py::none());

  m.def(
    "theta1_parametric",
    [](const Array& angles, const std::optional<Array>& weights) {
      return theta1_parametric_vm(make_sample(angles, weights)).value;
    },
    py::arg("angles"), py::arg("weights") = py::none());
  m.def(
    "theta1_nonparametric",
    [](const Array& angles, std::optional<int> M, bool unbiased) {
      const auto s = make_sample(angles, std::nullopt);
      return theta1_nonparametric(s, M.value_or(default_moment_order(s.size())), unbiased).value;
    },
    py::arg("angles"), py::arg("M") = py::none(), py::arg("unbiased") = false);
  m.def(
    "m_opt_density", [](double theta1, std::size_t n) { return bandwidth_dict(m_opt_density(theta1, n)); },
    py::arg("theta1"), py::arg("n"));
  m.def(
    "m_opt_cdf",
    [](const Array& angles, double origin, const std::optional<Array>& weights) {
      return bandwidth_dict(m_opt_cdf(make_sample(angles, weights), origin));
    },
    py::arg("angles"), py::arg("origin") = -kPi, py::arg("weights") = py::none());
  m.def(
    "m_opt_classical_wl",
    [](double theta1, std::size_t n, double rho) { return bandwidth_dict(m_opt_classical_wl(theta1, n, rho)); },
    py::arg("theta1"), py::arg("n"), py::arg("rho"));

  py::class_<ErrorModel>(m, "ErrorModel")
    .def_static("none", &ErrorModel::none)
    .def_static("wrapped_laplace", &ErrorModel::wrapped_laplace, py::arg("rho"))
    .def_static("wrapped_uniform", &ErrorModel::wrapped_uniform, py::arg("halfwidth"))
    .def_static("von_mises", &ErrorModel::von_mises, py::arg("kappa"))
    .def("lambda_", &ErrorModel::lambda, py::arg("j"))
    .def_property_readonly("parameter", &ErrorModel::parameter)
    .def("__repr__", &ErrorModel::label);

  m.def(
    "berkson",
    [](const Array& angles, int order, const ErrorModel& err, const py::object& grid, bool clip,
       const std::optional<Array>& weights) {
      return deconv_result(berkson_estimate(make_sample(angles, weights), FejerOrder(order), err, make_grid(grid),
                                            DeconvolutionOptions{ clip }));
    },
    py::arg("angles"), py::arg("m"), py::arg("error"), py::arg("grid") = py::none(), py::arg("clip") = false,
    py::arg("weights") = py::none(), "Berkson-error estimate; returns (theta, values, info).");
  m.def(
    "classical",
    [](const Array& angles, int order, const ErrorModel& err, const py::object& grid, bool clip,
       const std::optional<Array>& weights) {
      return deconv_result(classical_estimate(make_sample(angles, weights), FejerOrder(order), err, make_grid(grid),
                                              DeconvolutionOptions{ clip }));
    },
    py::arg("angles"), py::arg("m"), py::arg("error"), py::arg("grid") = py::none(), py::arg("clip") = false,
    py::arg("weights") = py::none(), "Deconvolution estimate for classical error; returns (theta, values, info).");

  py::class_<CircularModel>(m, "CircularModel")
    .def_static("von_mises", &CircularModel::von_mises, py::arg("mu"), py::arg("kappa"))
    .def_static("wrapped_normal", &CircularModel::wrapped_normal, py::arg("mu"), py::arg("rho"))
    .def_static("wrapped_cauchy", &CircularModel::wrapped_cauchy, py::arg("mu"), py::arg("rho"))
    .def_static("uniform", &CircularModel::uniform)
    .def_static("mixture", &CircularModel::mixture, py::arg("first"), py::arg("second"), py::arg("p"))
    .def(
      "density",
      [](const CircularModel& c, const py::array_t<double>& t) {
        return py::vectorize([&c](double x) { return c.density(x); })(t);
      },
      py::arg("theta"))
    .def(
      "cdf", [](const CircularModel& c, double t, double origin) { return c.cdf(t, origin); }, py::arg("theta"),
      py::arg("origin") = -kPi)
    .def(
      "sample",
      [](const CircularModel& c, std::size_t n, std::uint64_t seed, std::uint64_t stream) {
        RngStream rng(seed, stream);
        return to_array(c.draw(n, rng));
      },
      py::arg("n"), py::arg("seed"), py::arg("stream") = 0)
    .def("theta1", [](const CircularModel& c) { return theta1(c); })
    .def(
      "theta2", [](const CircularModel& c, double origin) { return theta2(c, origin); }, py::arg("origin"))
    .def(
      "mise", [](const CircularModel& c, int order, std::size_t n) { return mise_exact_density(c, FejerOrder(order), n); },
      py::arg("m"), py::arg("n"), "Exact MISE of the error-free density estimator.")
    .def("__repr__", &CircularModel::label);

  m.def(
    "rainfall",
    []() {
      const auto s = load_rainfall();
      return py::make_tuple(to_array({ s.angles().begin(), s.angles().end() }),
                            to_array({ s.weights().begin(), s.weights().end() }));
    },
    "Monthly rainfall counts as (angles, weights).");

  m.def(
    "reproduce",
    [](const std::string& table, std::size_t replications, std::uint64_t seed, unsigned threads) {
      const auto id = parse_table_id(table);
      if (!id)
        throw py::value_error("unknown table '" + table + "'");
      TableOptions opt;
      opt.replications = replications;
      opt.seed = seed;
      opt.threads = threads;
      py::gil_scoped_release release;
      return to_csv(run_table(*id, opt));
    },
    py::arg("table"), py::arg("replications") = 500, py::arg("seed") = 20240501, py::arg("threads") = 1,
    "Runs one simulation table and returns it as CSV text.");
}
