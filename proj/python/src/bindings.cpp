#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "recipwalk/closed_form.hpp"
#include "recipwalk/error.hpp"
#include "recipwalk/monte_carlo.hpp"
#include "recipwalk/network.hpp"
#include "recipwalk/scaling.hpp"
#include "recipwalk/spectral.hpp"
#include "recipwalk/walk_matrices.hpp"

namespace py = pybind11;
using namespace recipwalk;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Core routines for trapping on the reciprocity-weighted fractal network";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<Arc>(m, "Arc")
      .def_readonly("src", &Arc::src)
      .def_readonly("dst", &Arc::dst)
      .def_readonly("weight", &Arc::weight)
      .def("__repr__", [](const Arc& a) {
        return "Arc(" + std::to_string(a.src) + ", " + std::to_string(a.dst) + ", " + std::to_string(a.weight) + ")";
      });

  py::class_<WeightedDigraph>(m, "WeightedDigraph")
      .def_property_readonly("generation", &WeightedDigraph::generation)
      .def_property_readonly("theta", &WeightedDigraph::theta)
      .def_property_readonly("node_count", &WeightedDigraph::node_count)
      .def_property_readonly("arcs", [](const WeightedDigraph& n) {
        return std::vector<Arc>(n.arcs().begin(), n.arcs().end());
      })
      .def("out_strength", &WeightedDigraph::out_strength, py::arg("label"))
      .def("in_strength", &WeightedDigraph::in_strength, py::arg("label"));

  m.def("build_weighted", [](int g, double theta) { return build_weighted({g, theta}); }, py::arg("g"),
        py::arg("theta"));
  m.def("build_binary", [](int g) { return build_binary({g, 1.0}); }, py::arg("g"));

  py::class_<MfptReport>(m, "MfptReport")
      .def_property_readonly("method", [](const MfptReport& r) { return std::string(to_string(r.method)); })
      .def_readonly("generation", &MfptReport::generation)
      .def_readonly("theta", &MfptReport::theta)
      .def_readonly("average", &MfptReport::average)
      .def_readonly("per_node", &MfptReport::per_node)
      .def("trapping_time", &MfptReport::trapping_time, py::arg("label"));

  m.def("p_matrix", [](const WeightedDigraph& net) { return assemble(net).p_matrix(); }, py::arg("net"),
        "Dense I - R with the trap row and column removed; row k is label k + 2.");
  m.def("solve_trapping_times", [](const WeightedDigraph& net) { return solve_trapping_times(assemble(net)); },
        py::arg("net"));

  m.def("growth_factor", &growth_factor, py::arg("theta"));
  m.def("t_ext_closed", &t_ext_closed, py::arg("g"), py::arg("theta"));
  m.def("t_tot_closed", &t_tot_closed, py::arg("g"), py::arg("theta"));
  m.def("mfpt_closed", &mfpt_closed, py::arg("g"), py::arg("theta"));
  m.def("scaling_exponent", &scaling_exponent, py::arg("theta"));

  m.def(
      "spectrum",
      [](int g, double theta) {
        std::vector<std::pair<double, std::uint64_t>> out;
        const SpectrumMultiset spec = spectrum(g, theta);
        for (const auto& e : spec.entries()) out.emplace_back(e.value, e.multiplicity);
        return out;
      },
      py::arg("g"), py::arg("theta"), "Sorted (eigenvalue, multiplicity) pairs of P_g.");
  m.def(
      "lambda_min",
      [](int g, double theta, bool taylor) {
        return lambda_min(g, theta, taylor ? LambdaMode::taylor_approx : LambdaMode::exact_recursion);
      },
      py::arg("g"), py::arg("theta"), py::arg("taylor") = false);

  py::class_<SimReport>(m, "SimReport")
      .def_readonly("average", &SimReport::average)
      .def_readonly("average_std_error", &SimReport::average_std_error)
      .def_readonly("truncated_walks", &SimReport::truncated_walks)
      .def_property_readonly("valid", &SimReport::valid)
      .def_property_readonly("per_node", [](const SimReport& r) {
        std::vector<std::tuple<Label, double, double>> out;
        for (const auto& e : r.per_node) out.emplace_back(e.label, e.mean, e.std_error);
        return out;
      });

  m.def(
      "simulate",
      [](const WeightedDigraph& net, std::uint64_t walkers, std::uint64_t seed, std::uint64_t max_steps,
         unsigned threads) {
        SimConfig cfg;
        cfg.walkers_per_node = walkers;
        cfg.seed = seed;
        cfg.max_steps = max_steps;
        cfg.threads = threads;
        py::gil_scoped_release release;
        return simulate(net, cfg);
      },
      py::arg("net"), py::arg("walkers") = 10000, py::arg("seed") = 1, py::arg("max_steps") = 1'000'000'000,
      py::arg("threads") = 0);

  m.def(
      "scaling_fit",
      [](double theta, int g_min, int g_max, const std::string& method) {
        if (method != "closed" && method != "solve") throw DomainError("method must be 'closed' or 'solve'");
        const ScalingFit fit =
            run_scaling_fit(theta, g_min, g_max, method == "closed" ? MfptSource::closed : MfptSource::solve);
        py::dict d;
        d["fitted_exponent"] = fit.fitted_exponent;
        d["ols_exponent"] = fit.ols_exponent;
        d["predicted_exponent"] = fit.predicted_exponent;
        py::list points;
        for (const auto& p : fit.points) points.append(py::make_tuple(p.generation, p.size, p.mfpt));
        d["points"] = points;
        return d;
      },
      py::arg("theta"), py::arg("g_min"), py::arg("g_max"), py::arg("method") = "closed");
}
