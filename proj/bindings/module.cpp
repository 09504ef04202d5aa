#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dgsc/diagnostics.hpp"
#include "dgsc/experiments.hpp"
#include "dgsc/fourier.hpp"
#include "dgsc/pade.hpp"
#include "dgsc/projections.hpp"

namespace py = pybind11;
using namespace dgsc;

PYBIND11_MODULE(_dgsc, m) {
    m.doc() = "DG advection solver with Pade/Fourier superconvergence analysis";

    m.def("legendre_eval", &legendre_eval, py::arg("k"), py::arg("x"));
    m.def("legendre_deriv_eval", &legendre_deriv_eval, py::arg("k"), py::arg("x"));
    m.def("radau_roots", &radau_roots, py::arg("p"));
    m.def(
        "gauss_rule",
        [](int n) {
            auto q = gauss_rule(n);
            return std::make_pair(q.nodes, q.weights);
        },
        py::arg("n"));

    m.def("pade_defect", &pade_defect, py::arg("p"), py::arg("terms"));
    m.def("nonphysical_roots", &nonphysical_roots, py::arg("p"));
    m.def(
        "pade_pair",
        [](int p) {
            auto fg = build_fg(p);
            return std::make_pair(fg.g.coeffs, fg.f_at_one().coeffs);
        },
        py::arg("p"), "Monomial coefficients of (g, f(.,1)).");

    m.def(
        "frequencies",
        [](int p, double h, std::complex<double> kappa) {
            auto set = frequencies(p, h, kappa);
            return std::make_pair(set.roots, set.physical_index);
        },
        py::arg("p"), py::arg("h"), py::arg("kappa"));
    m.def("damping_time", &damping_time, py::arg("p"), py::arg("h"), py::arg("a"));

    py::class_<SweepColumn>(m, "SweepColumn")
        .def_readonly("label", &SweepColumn::label)
        .def_readonly("errors", &SweepColumn::errors)
        .def_property_readonly("rates", [](const SweepColumn& c) {
            std::vector<py::object> out;
            for (const auto& r : c.rates)
                out.push_back(r ? py::cast(*r) : py::none());
            return out;
        });
    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("n_values", &SweepResult::n_values)
        .def_readonly("columns", &SweepResult::columns);

    m.def("preset_names", &preset_names);
    m.def(
        "run_preset",
        [](const std::string& name, int jobs) { return run_sweep(preset(name), jobs); },
        py::arg("name"), py::arg("jobs") = 1,
        "Run a table preset and return its sweep errors and rates.");
    m.def(
        "run_decay",
        [](const std::string& name) {
            auto d = run_decay(preset(name));
            return std::make_pair(d.times, d.errors);
        },
        py::arg("name"));
    m.def(
        "single_run_errors",
        [](int p, int n_cells, const std::string& projection, double t_h_multiple,
           int mode) {
            ExperimentSpec spec;
            spec.base.p = p;
            spec.base.t_final_h_multiple = t_h_multiple;
            spec.sweep_n = {n_cells};
            spec.projections = {projection_from_name(projection)};
            spec.initial_mode = mode;
            auto res = run_sweep(spec, 1);
            std::map<std::string, double> out;
            for (const auto& col : res.columns) out[col.label] = col.errors.at(0);
            return out;
        },
        py::arg("p"), py::arg("n_cells"), py::arg("projection") = "l2",
        py::arg("t_h_multiple") = 1.0, py::arg("mode") = 4,
        "Advect sin(2 pi mode x / L) to t = multiple*h and report error norms.");
}
