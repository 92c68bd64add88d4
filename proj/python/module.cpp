// Python bindings for the core operations: scenario presets, closed-form
// coverage/exposure probabilities, and the Monte Carlo estimator.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <iostream>

#include "swiptnet/config.hpp"
#include "swiptnet/montecarlo.hpp"
#include "swiptnet/presets.hpp"
#include "swiptnet/sweep.hpp"
#include "swiptnet/version.hpp"

namespace py = pybind11;
using namespace swipt;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coverage and RF-exposure analysis of a large-scale SWIPT network";
    m.attr("__version__") = kVersion;

    // translators run in reverse registration order: bases first, derived last
    py::register_exception<ConvergenceError>(m, "ConvergenceError");
    py::register_exception<DiagnosticError>(m, "DiagnosticError");
    py::register_exception<RangeError>(m, "RangeError");
    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<IoError>(m, "IoError");
    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<PoleError>(m, "PoleError");
    py::register_exception<SaturationError>(m, "SaturationError");

    py::class_<RectennaModel>(m, "RectennaModel")
        .def(py::init<>())
        .def(py::init([](double a, double b, double c) {
                 RectennaModel r{a, b, c};
                 r.validate();
                 return r;
             }),
             py::arg("a_bar"), py::arg("b_bar"), py::arg("c_bar"))
        .def_readwrite("a_bar", &RectennaModel::a_bar)
        .def_readwrite("b_bar", &RectennaModel::b_bar)
        .def_readwrite("c_bar", &RectennaModel::c_bar)
        .def("saturation", &RectennaModel::saturation);

    py::class_<AntennaPattern>(m, "AntennaPattern")
        .def(py::init<>())
        .def_readwrite("omega", &AntennaPattern::omega)
        .def_readwrite("M", &AntennaPattern::M)
        .def_readwrite("m", &AntennaPattern::m);

    py::class_<GainClass>(m, "GainClass")
        .def_readonly("gain", &GainClass::gain)
        .def_readonly("prob", &GainClass::prob);

    py::class_<NetworkParams>(m, "NetworkParams")
        .def(py::init<>())
        .def_readwrite("lam", &NetworkParams::lam)
        .def_readwrite("p_L", &NetworkParams::p_L)
        .def_readwrite("alpha", &NetworkParams::alpha)
        .def_readwrite("mu", &NetworkParams::mu)
        .def_readwrite("d0", &NetworkParams::d0)
        .def_readwrite("P_t", &NetworkParams::P_t)
        .def_readwrite("antenna", &NetworkParams::antenna)
        .def_readwrite("N0", &NetworkParams::N0)
        .def_readwrite("N_C", &NetworkParams::N_C)
        .def_readwrite("rho", &NetworkParams::rho)
        .def_readwrite("rectenna", &NetworkParams::rectenna)
        .def("P0", &NetworkParams::P0)
        .def("validate", &NetworkParams::validate);

    py::class_<CoverageThresholds>(m, "CoverageThresholds")
        .def(py::init<>())
        .def(py::init([](double tau, double gamma, double eps) {
                 return CoverageThresholds{tau, gamma, eps};
             }),
             py::arg("tau"), py::arg("gamma"), py::arg("eps"))
        .def_readwrite("tau", &CoverageThresholds::tau)
        .def_readwrite("gamma", &CoverageThresholds::gamma)
        .def_readwrite("eps", &CoverageThresholds::eps);

    py::class_<QuadratureOptions>(m, "QuadratureOptions")
        .def(py::init<>())
        .def_readwrite("t_min", &QuadratureOptions::t_min)
        .def_readwrite("abs_tol", &QuadratureOptions::abs_tol)
        .def_readwrite("max_panels", &QuadratureOptions::max_panels)
        .def_readwrite("panel_order", &QuadratureOptions::panel_order);

    py::class_<Interferer>(m, "Interferer")
        .def_readonly("distance", &Interferer::distance)
        .def_readonly("gain", &Interferer::gain)
        .def_readonly("fade", &Interferer::fade);

    py::class_<Realization>(m, "Realization")
        .def(py::init<>())
        .def_readwrite("h0", &Realization::h0)
        .def_readwrite("interferers", &Realization::interferers);

    py::class_<McSettings>(m, "McSettings")
        .def(py::init<>())
        .def_readwrite("trials", &McSettings::trials)
        .def_readwrite("seed", &McSettings::seed)
        .def_readwrite("disk_radius", &McSettings::disk_radius)
        .def_readwrite("parallel", &McSettings::parallel)
        .def_readwrite("tail_compensation", &McSettings::tail_compensation);

    py::class_<ProbabilityEstimate>(m, "ProbabilityEstimate")
        .def_readonly("value", &ProbabilityEstimate::value)
        .def_readonly("ci_half_width", &ProbabilityEstimate::ci_half_width)
        .def_readonly("trials", &ProbabilityEstimate::trials)
        .def("__repr__", [](const ProbabilityEstimate& e) {
            return "ProbabilityEstimate(value=" + format_sig12(e.value) +
                   ", ci_half_width=" + format_sig12(e.ci_half_width) + ")";
        });

    py::class_<EstimateSet>(m, "EstimateSet")
        .def_readonly("p_s", &EstimateSet::p_s)
        .def_readonly("p_o", &EstimateSet::p_o)
        .def_readonly("p_e", &EstimateSet::p_e)
        .def_readonly("p_J", &EstimateSet::p_J)
        .def_readonly("joint_all", &EstimateSet::joint_all);

    py::class_<Scenario>(m, "Scenario")
        .def_readwrite("name", &Scenario::name)
        .def_readwrite("params", &Scenario::params)
        .def_readwrite("thresholds", &Scenario::thresholds);

    // presets and units
    m.def("db_to_linear", &db_to_linear, py::arg("db"));
    m.def("linear_to_db", &linear_to_db, py::arg("value"));
    m.def("mmwave_preset", &mmwave_preset);
    m.def("uhf_preset", &uhf_preset);
    m.def("preset_by_name", &preset_by_name, py::arg("name"));
    m.def("preset_names", &preset_names);

    // per-realization metrics
    m.def("gain_pmf", &gain_pmf, py::arg("antenna"));
    m.def("received_power", &received_power, py::arg("realization"), py::arg("params"));
    m.def("sinr_of", &sinr_of, py::arg("realization"), py::arg("params"));
    m.def("harvested_energy", &harvested_energy, py::arg("P_r"), py::arg("rho"), py::arg("rectenna"));
    m.def("harvest_threshold", &harvest_threshold, py::arg("eps"), py::arg("rho"), py::arg("rectenna"));
    m.def("mpe_of", &mpe_of, py::arg("realization"), py::arg("params"));

    // closed-form probabilities
    m.def("interference_cf", &interference_cf, py::arg("t"), py::arg("lam"), py::arg("P"),
          py::arg("a_exp"), py::arg("mu"));
    m.def("psi", &psi, py::arg("t"), py::arg("params"), py::arg("a_exp"));
    m.def("gil_pelaez_cdf", &gil_pelaez_cdf, py::arg("cf"), py::arg("x"),
          py::arg("options") = QuadratureOptions{}, py::arg("t_stop_hint") = 0.0);
    m.def("mpe_prob", &mpe_prob, py::arg("tau"), py::arg("params"),
          py::arg("options") = QuadratureOptions{});
    m.def("mpe_prob_asymptotic", &mpe_prob_asymptotic, py::arg("tau"), py::arg("params"),
          py::arg("options") = QuadratureOptions{});
    m.def("info_coverage", &info_coverage, py::arg("gamma"), py::arg("params"),
          py::arg("options") = QuadratureOptions{});
    m.def("energy_coverage", &energy_coverage, py::arg("eps"), py::arg("params"),
          py::arg("options") = QuadratureOptions{});
    m.def("joint_coverage", &joint_coverage, py::arg("thresholds"), py::arg("params"),
          py::arg("options") = QuadratureOptions{});
    m.def("joint_with_mpe", &joint_with_mpe, py::arg("thresholds"), py::arg("params"),
          py::arg("options") = QuadratureOptions{});
    m.def("no_interference_joint", &no_interference_joint, py::arg("thresholds"), py::arg("params"));
    m.def("optimal_power", &optimal_power, py::arg("thresholds"), py::arg("params"));

    // Monte Carlo
    m.def("sample_realization", &sample_realization, py::arg("params"), py::arg("settings"),
          py::arg("trial"));
    m.def("estimate", &estimate, py::arg("params"), py::arg("thresholds"), py::arg("settings"),
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "estimate_power_grid",
        [](const NetworkParams& p, const CoverageThresholds& th, const McSettings& s,
           const std::vector<double>& grid) {
            py::gil_scoped_release release;
            return estimate_power_grid(p, th, s, grid);
        },
        py::arg("params"), py::arg("thresholds"), py::arg("settings"), py::arg("P_t_grid"));
    m.def(
        "empirical_cf",
        [](const std::vector<double>& ts, const NetworkParams& p, double a_exp,
           const McSettings& s) {
            py::gil_scoped_release release;
            return empirical_cf(ts, p, a_exp, s);
        },
        py::arg("ts"), py::arg("params"), py::arg("a_exp"), py::arg("settings"));
    m.def("exact_joint_with_mpe", &exact_joint_with_mpe, py::arg("params"), py::arg("thresholds"),
          py::arg("settings"), py::call_guard<py::gil_scoped_release>());
    m.def("wilson_half_width", &wilson_half_width, py::arg("p_hat"), py::arg("trials"));
    m.def("truncated_tail_mean", &truncated_tail_mean, py::arg("params"), py::arg("a_exp"),
          py::arg("radius"));

    // sweep plumbing
    m.def("load_config", &load_config, py::arg("path"));
    m.def(
        "run_sweep",
        [](const std::string& config_path, const std::string& out_csv) {
            Config cfg = load_config(config_path);
            return run_sweep(cfg.scenario, cfg.thresholds, cfg.sweep, out_csv, std::cerr);
        },
        py::arg("config_path"), py::arg("out_csv"));
}
