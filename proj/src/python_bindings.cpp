#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rotorcom/config.hpp"
#include "rotorcom/csv.hpp"
#include "rotorcom/errors.hpp"
#include "rotorcom/langevin.hpp"
#include "rotorcom/linear_dynamics.hpp"
#include "rotorcom/moments.hpp"
#include "rotorcom/params.hpp"
#include "rotorcom/plot.hpp"
#include "rotorcom/rotor.hpp"
#include "rotorcom/spinor_ed.hpp"
#include "rotorcom/steady_state.hpp"
#include "rotorcom/sweep.hpp"

namespace py = pybind11;
using namespace rotorcom;

PYBIND11_MODULE(_core, m) {
  m.doc() = "cavity-coupled spin-1 condensate rotor toolkit";

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<AntiTrappingError>(m, "AntiTrappingError");
  py::register_exception<StabilityError>(m, "StabilityError");
  py::register_exception<DivergenceError>(m, "DivergenceError");

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def(py::init<>())
      .def_readwrite("c2", &PhysicalParams::c2)
      .def_readwrite("q", &PhysicalParams::q)
      .def_readwrite("n_atoms", &PhysicalParams::n_atoms)
      .def_readwrite("u0", &PhysicalParams::u0)
      .def_readwrite("gamma", &PhysicalParams::gamma)
      .def_readwrite("kappa_l", &PhysicalParams::kappa_l)
      .def_readwrite("delta", &PhysicalParams::delta)
      .def_readwrite("d_theta", &PhysicalParams::d_theta)
      .def_readwrite("temperature", &PhysicalParams::temperature)
      .def("validate", &PhysicalParams::validate);

  py::class_<RegimeReport>(m, "RegimeReport")
      .def_readonly("ratio_c2_q", &RegimeReport::ratio_c2_q)
      .def_readonly("bound_2n2", &RegimeReport::bound_2n2)
      .def_readonly("margin", &RegimeReport::margin)
      .def_readonly("lower_ok", &RegimeReport::lower_ok)
      .def_readonly("upper_ok", &RegimeReport::upper_ok)
      .def("ok", &RegimeReport::ok);

  m.def("quadratic_zeeman", &quadratic_zeeman, py::arg("b_field"), py::arg("delta_hf"));
  m.def("thermal_frequency", &thermal_frequency, py::arg("temperature"));
  m.def("validate_regime", &validate_regime, py::arg("params"), py::arg("margin") = 10.0);

  py::class_<RotorModel>(m, "RotorModel")
      .def_readonly("inertia", &RotorModel::inertia)
      .def_readonly("omega_theta", &RotorModel::omega_theta)
      .def_readonly("xi_theta", &RotorModel::xi_theta)
      .def_readonly("theta_bar", &RotorModel::theta_bar);

  py::enum_<WidthMode>(m, "WidthMode")
      .value("dimensional", WidthMode::dimensional)
      .value("leading_order", WidthMode::leading_order);

  m.def("build_rotor", &build_rotor, py::arg("params"));
  m.def("potential_full", &potential_full, py::arg("theta"), py::arg("params"));
  m.def("potential_harmonic", &potential_harmonic, py::arg("theta"), py::arg("model"));
  m.def("quartic_beta", &quartic_beta, py::arg("params"), py::arg("photon_number"));
  m.def("ground_state_width", &ground_state_width, py::arg("params"),
        py::arg("mode") = WidthMode::dimensional);
  m.def("ground_state_density", &ground_state_density, py::arg("theta"),
        py::arg("params"), py::arg("mode") = WidthMode::dimensional);

  py::class_<SpinorSpectrum>(m, "SpinorSpectrum")
      .def_readonly("n_atoms", &SpinorSpectrum::n_atoms)
      .def_readonly("basis_dimension", &SpinorSpectrum::basis_dimension)
      .def_readonly("energies", &SpinorSpectrum::energies)
      .def_readonly("ground_energy", &SpinorSpectrum::ground_energy)
      .def_readonly("ground_n0", &SpinorSpectrum::ground_n0)
      .def_readonly("ground_fz", &SpinorSpectrum::ground_fz);

  m.def("exact_spinor_spectrum", &exact_spinor_spectrum, py::arg("n_atoms"),
        py::arg("c2"), py::arg("q"), py::arg("k"));
  m.def("spinor_basis_dimension", &spinor_basis_dimension, py::arg("n_atoms"));

  py::class_<SteadyState>(m, "SteadyState")
      .def_readonly("a_s", &SteadyState::a_s)
      .def_readonly("photon_number", &SteadyState::photon_number)
      .def_readonly("eta", &SteadyState::eta)
      .def_readonly("omega_eff", &SteadyState::omega_eff)
      .def_readonly("theta_s", &SteadyState::theta_s)
      .def_readonly("l_z_s", &SteadyState::l_z_s);

  m.def("cavity_steady_field", &cavity_steady_field, py::arg("params"));
  m.def("enhancement_factor", &enhancement_factor, py::arg("params"));
  m.def("effective_frequency", &effective_frequency, py::arg("params"), py::arg("model"));
  m.def("solve_steady", &solve_steady, py::arg("params"), py::arg("model"));

  py::class_<DriftMatrix>(m, "DriftMatrix")
      .def_property_readonly("r", [](const DriftMatrix& d) { return d.r; });

  m.def("build_drift", &build_drift, py::arg("params"), py::arg("model"),
        py::arg("steady"));
  m.def("drift_char_poly", &drift_char_poly, py::arg("drift"));
  m.def("stable_routh_hurwitz", &stable_routh_hurwitz, py::arg("drift"));
  m.def("drift_eigenvalues", &drift_eigenvalues, py::arg("drift"));
  m.def("susceptibility", &susceptibility, py::arg("omega"), py::arg("params"),
        py::arg("model"), py::arg("steady"));
  m.def("noise_spectrum_epsilon", &noise_spectrum_epsilon, py::arg("omega"),
        py::arg("d_theta"), py::arg("temperature"));
  m.def("theta_spectrum", &theta_spectrum, py::arg("omega"), py::arg("params"),
        py::arg("model"), py::arg("steady"));

  py::class_<QuadratureResponse>(m, "QuadratureResponse")
      .def_readonly("t_self", &QuadratureResponse::t_self)
      .def_readonly("t_cross", &QuadratureResponse::t_cross)
      .def_readonly("s_x1", &QuadratureResponse::s_x1)
      .def_readonly("s_x2", &QuadratureResponse::s_x2);

  m.def("quadrature_response", &quadrature_response, py::arg("omega"), py::arg("params"));

  py::class_<SpectrumPoint>(m, "SpectrumPoint")
      .def_readonly("omega", &SpectrumPoint::omega)
      .def_readonly("chi", &SpectrumPoint::chi)
      .def_readonly("s_theta", &SpectrumPoint::s_theta)
      .def_readonly("s_x1", &SpectrumPoint::s_x1)
      .def_readonly("s_x2", &SpectrumPoint::s_x2);

  m.def("evaluate_spectrum", &evaluate_spectrum, py::arg("params"), py::arg("model"),
        py::arg("steady"), py::arg("omegas"));

  py::class_<MomentState>(m, "MomentState")
      .def(py::init<>())
      .def_readwrite("theta2", &MomentState::theta2)
      .def_readwrite("l2", &MomentState::l2)
      .def_readwrite("sym", &MomentState::sym)
      .def_readwrite("t", &MomentState::t);

  m.def("moment_rhs", &moment_rhs, py::arg("state"), py::arg("params"),
        py::arg("model"), py::arg("steady"));
  m.def("steady_moments", &steady_moments, py::arg("params"), py::arg("model"),
        py::arg("steady"));
  m.def("integrate_moments", &integrate_moments, py::arg("initial"), py::arg("params"),
        py::arg("model"), py::arg("steady"), py::arg("t_end"), py::arg("dt"),
        py::arg("record_stride") = 1);
  m.def("thermal_occupation", &thermal_occupation, py::arg("omega"),
        py::arg("temperature"));
  m.def("rotor_energy", &rotor_energy, py::arg("state"), py::arg("model"));
  m.def("roton_occupation", &roton_occupation, py::arg("n_thermal"), py::arg("eta"));

  py::enum_<NoiseMode>(m, "NoiseMode")
      .value("deterministic", NoiseMode::deterministic)
      .value("classical_white", NoiseMode::classical_white)
      .value("quantum_colored", NoiseMode::quantum_colored);

  py::enum_<PsdWindow>(m, "PsdWindow")
      .value("none", PsdWindow::none)
      .value("hann", PsdWindow::hann);

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("t_end", &SimConfig::t_end)
      .def_readwrite("dt", &SimConfig::dt)
      .def_readwrite("seed", &SimConfig::seed)
      .def_readwrite("n_trajectories", &SimConfig::n_trajectories)
      .def_readwrite("noise_mode", &SimConfig::noise_mode)
      .def_readwrite("include_vacuum_input", &SimConfig::include_vacuum_input)
      .def_readwrite("include_quartic", &SimConfig::include_quartic)
      .def_readwrite("theta0", &SimConfig::theta0)
      .def_readwrite("l_z0", &SimConfig::l_z0)
      .def_readwrite("a0", &SimConfig::a0);

  py::class_<TrajectoryRecord>(m, "TrajectoryRecord")
      .def_readonly("t", &TrajectoryRecord::t)
      .def_readonly("theta", &TrajectoryRecord::theta)
      .def_readonly("l_z", &TrajectoryRecord::l_z)
      .def_readonly("a", &TrajectoryRecord::a);

  m.def("generate_colored_noise", &generate_colored_noise, py::arg("spectrum"),
        py::arg("dt"), py::arg("n_samples"), py::arg("seed"));
  m.def("integrate_trajectory", &integrate_trajectory, py::arg("params"),
        py::arg("model"), py::arg("steady"), py::arg("config"),
        py::arg("trajectory_index") = 0);
  m.def("welch_psd", &welch_psd, py::arg("x"), py::arg("dt"), py::arg("segment_len"),
        py::arg("window"));
  m.def("ensemble_theta_psd", &ensemble_theta_psd, py::arg("trajectories"),
        py::arg("dt"), py::arg("segment_len"), py::arg("window"),
        py::arg("transient_time"));
  m.def("simulate_ensemble_psd", &simulate_ensemble_psd, py::arg("params"),
        py::arg("model"), py::arg("steady"), py::arg("config"), py::arg("segment_len"),
        py::arg("window"), py::arg("transient_time"), py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("ensemble_theta_variance", &ensemble_theta_variance, py::arg("params"),
        py::arg("model"), py::arg("steady"), py::arg("config"),
        py::arg("transient_time"), py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());

  py::enum_<SweepAxis>(m, "SweepAxis")
      .value("delta_over_gamma", SweepAxis::delta_over_gamma)
      .value("q_over_c2", SweepAxis::q_over_c2)
      .value("kappa_l_hz", SweepAxis::kappa_l_hz)
      .value("temperature_k", SweepAxis::temperature_k);

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("axis", &SweepSpec::axis)
      .def_readwrite("start", &SweepSpec::start)
      .def_readwrite("stop", &SweepSpec::stop)
      .def_readwrite("points", &SweepSpec::points)
      .def_readwrite("temperatures", &SweepSpec::temperatures)
      .def_readwrite("margin", &SweepSpec::margin)
      .def_readwrite("jobs", &SweepSpec::jobs);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("axis_value", &SweepRow::axis_value)
      .def_readonly("temperature_k", &SweepRow::temperature_k)
      .def_readonly("eta", &SweepRow::eta)
      .def_readonly("omega_eff", &SweepRow::omega_eff)
      .def_readonly("n_thermal", &SweepRow::n_thermal)
      .def_readonly("nbar", &SweepRow::nbar)
      .def_readonly("stable", &SweepRow::stable)
      .def_readonly("regime_ok", &SweepRow::regime_ok);

  m.def("run_sweep", &run_sweep, py::arg("base"), py::arg("spec"),
        py::call_guard<py::gil_scoped_release>());

  m.def("parse_config_text", &parse_config_text, py::arg("text"),
        py::arg("overrides") = KeyValues{});
  m.def("load_config_file", &load_config_file, py::arg("path"),
        py::arg("overrides") = KeyValues{});
  m.def("sweep_csv", &sweep_csv, py::arg("params"), py::arg("spec"), py::arg("rows"));
  m.def("sweep_plot_svg", &sweep_plot_svg, py::arg("spec"), py::arg("rows"));
}
