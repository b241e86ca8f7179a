#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "descm/descm.hpp"

namespace py = pybind11;
using namespace descm;

PYBIND11_MODULE(_descm, m) {
  m.doc() = "Double-exponential Sinc collocation for anharmonic oscillators";

  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<EvenPolynomialPotential>(m, "EvenPolynomialPotential")
      .def(py::init<std::vector<double>, double>(), py::arg("coefficients"), py::arg("constant") = 0.0)
      .def("__call__", &EvenPolynomialPotential::operator(), py::arg("x"))
      .def_property_readonly("coefficients",
                             [](const EvenPolynomialPotential& p) {
                               auto c = p.coefficients();
                               return std::vector<double>(c.begin(), c.end());
                             })
      .def_property_readonly("constant", &EvenPolynomialPotential::constant)
      .def_property_readonly("degree_parameter", &EvenPolynomialPotential::degree_parameter)
      .def("to_spec", &EvenPolynomialPotential::to_spec)
      .def("__repr__", [](const EvenPolynomialPotential& p) { return "EvenPolynomialPotential('" + p.to_spec() + "')"; });

  py::class_<AnalyticCase>(m, "AnalyticCase")
      .def_readonly("name", &AnalyticCase::name)
      .def_readonly("potential", &AnalyticCase::potential)
      .def_readonly("level", &AnalyticCase::level)
      .def_readonly("exact_energy", &AnalyticCase::exact_energy);

  m.def("parse_potential", &parse_potential, py::arg("spec"));
  m.def("chebyshev_well", &chebyshev_well, py::arg("degree"), py::arg("shift") = 0.0);
  m.def("analytic_catalog", &analytic_catalog);
  m.def("transformed_potential", &transformed_potential, py::arg("potential"), py::arg("t"));

  py::enum_<MeshStrategy::Kind>(m, "MeshKind")
      .value("OptimalLambertW", MeshStrategy::Kind::OptimalLambertW)
      .value("TraceMinimized", MeshStrategy::Kind::TraceMinimized)
      .value("Fixed", MeshStrategy::Kind::Fixed);

  py::class_<MeshStrategy>(m, "MeshStrategy")
      .def_static("optimal", &MeshStrategy::optimal)
      .def_static("trace_minimized", &MeshStrategy::trace_minimized, py::arg("low") = 1e-3,
                  py::arg("high") = 5.0, py::arg("tolerance") = 1e-10)
      .def_static("fixed", &MeshStrategy::fixed, py::arg("h"))
      .def_readonly("kind", &MeshStrategy::kind)
      .def_readonly("fixed_h", &MeshStrategy::fixed_h)
      .def_readonly("bracket_low", &MeshStrategy::bracket_low)
      .def_readonly("bracket_high", &MeshStrategy::bracket_high)
      .def_readonly("tolerance", &MeshStrategy::tolerance);

  m.def("lambert_w0", &lambert_w0, py::arg("z"));
  m.def("optimal_h", &optimal_h, py::arg("potential"), py::arg("N"));
  m.def("trace_of_K", &trace_of_K, py::arg("potential"), py::arg("N"), py::arg("h"));
  m.def("trace_minimized_h", &trace_minimized_h, py::arg("potential"), py::arg("N"),
        py::arg("strategy") = MeshStrategy::trace_minimized());

  m.def(
      "assemble_K",
      [](const EvenPolynomialPotential& p, int N, double h) { return assemble_K(p, N, h).entries(); },
      py::arg("potential"), py::arg("N"), py::arg("h"));
  m.def(
      "eigen_symmetric",
      [](const Eigen::MatrixXd& a, bool want_vectors) {
        auto d = eigen_symmetric(a, want_vectors);
        return py::make_tuple(d.eigenvalues, d.eigenvectors);
      },
      py::arg("matrix"), py::arg("want_vectors") = false);

  py::class_<SpectrumResult>(m, "SpectrumResult")
      .def_readonly("N", &SpectrumResult::half_width)
      .def_readonly("h_used", &SpectrumResult::h_used)
      .def_readonly("strategy_kind", &SpectrumResult::strategy_kind)
      .def_readonly("eigenvalues", &SpectrumResult::eigenvalues)
      .def_readonly("wall_time", &SpectrumResult::wall_time)
      .def_readonly("eigenvectors", &SpectrumResult::eigenvectors);

  m.def(
      "solve",
      [](const EvenPolynomialPotential& p, int N, int levels, const MeshStrategy& strategy, bool want_vectors) {
        return solve(DescmProblem{p, strategy, levels}, N, want_vectors);
      },
      py::arg("potential"), py::arg("N"), py::arg("levels") = 1, py::arg("strategy") = MeshStrategy::optimal(),
      py::arg("want_vectors") = false);

  py::class_<ConvergenceRecord>(m, "ConvergenceRecord")
      .def_readonly("N", &ConvergenceRecord::half_width)
      .def_readonly("h", &ConvergenceRecord::h)
      .def_readonly("energy", &ConvergenceRecord::energy)
      .def_readonly("epsilon", &ConvergenceRecord::epsilon);

  py::class_<ConvergenceTrace>(m, "ConvergenceTrace")
      .def_readonly("level", &ConvergenceTrace::level)
      .def_readonly("records", &ConvergenceTrace::records)
      .def_readonly("converged", &ConvergenceTrace::converged)
      .def_readonly("final_level_values", &ConvergenceTrace::final_level_values);

  m.def(
      "converge",
      [](const EvenPolynomialPotential& p, int level, double tolerance, int start, int step, int max_N,
         const MeshStrategy& strategy) {
        ConvergenceOptions options;
        options.tolerance = tolerance;
        options.start = start;
        options.step = step;
        options.max_half_width = max_N;
        return converge(DescmProblem{p, strategy, 1}, level, options);
      },
      py::arg("potential"), py::arg("level") = 0, py::arg("tolerance") = 5e-12, py::arg("start") = 2,
      py::arg("step") = 1, py::arg("max_N") = 200, py::arg("strategy") = MeshStrategy::optimal());

  m.def("reconstruct_wavefunction", &reconstruct_wavefunction, py::arg("result"), py::arg("level"), py::arg("x"));
}
