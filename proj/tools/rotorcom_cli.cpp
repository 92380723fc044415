// Command-line driver for the rotor-cavity toolkit.
// Exit codes: 0 success, 1 config/usage error, 2 physics-regime error
// (anti-trapping, instability, out-of-regime with --strict), 3 numerical failure.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rotorcom/config.hpp"
#include "rotorcom/constants.hpp"
#include "rotorcom/csv.hpp"
#include "rotorcom/errors.hpp"
#include "rotorcom/langevin.hpp"
#include "rotorcom/linear_dynamics.hpp"
#include "rotorcom/moments.hpp"
#include "rotorcom/plot.hpp"
#include "rotorcom/rotor.hpp"
#include "rotorcom/spinor_ed.hpp"
#include "rotorcom/steady_state.hpp"
#include "rotorcom/sweep.hpp"

namespace {

using namespace rotorcom;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRegime = 2;
constexpr int kExitNumerical = 3;

// Per-subcommand parameter source: --config plus the individual key flags,
// which win over the file.
struct ParamArgs {
  std::string config_path;
  std::vector<std::string> sets;  // raw key=value pairs
  std::vector<std::pair<std::string, std::string>> flag_values;

  void attach(CLI::App* cmd) {
    cmd->add_option("-c,--config", config_path, "parameter file (key = value lines)");
    cmd->add_option("--set", sets, "override as key=value (repeatable)");
    for (const char* key :
         {"c2_hz", "q_hz", "b_field_gauss", "delta_hf_hz", "n_atoms", "u0_hz",
          "gamma_hz", "kappa_l_hz", "delta_hz", "delta_over_gamma", "d_theta",
          "temperature_k"}) {
      cmd->add_option_function<std::string>(
          std::string("--") + key,
          [this, key](const std::string& v) { flag_values.emplace_back(key, v); },
          "override the config key of the same name");
    }
  }

  PhysicalParams load() const {
    KeyValues overrides;
    for (const auto& s : sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos)
        throw ConfigError("--set expects key=value, got: " + s);
      overrides.emplace_back(s.substr(0, eq), s.substr(eq + 1));
    }
    overrides.insert(overrides.end(), flag_values.begin(), flag_values.end());
    if (config_path.empty()) return parse_config_text("", overrides);
    return load_config_file(config_path, overrides);
  }
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text_file(out_path, content);
}

int default_jobs() {
  const char* env = std::getenv("ROTORCOM_JOBS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v < 1)
    throw ConfigError(std::string("bad ROTORCOM_JOBS value: ") + env);
  return static_cast<int>(v);
}

int cmd_validate(const ParamArgs& pa, double margin, bool strict) {
  const PhysicalParams p = pa.load();
  const RotorModel m = build_rotor(p);
  const RegimeReport rep = validate_regime(p, margin);
  std::cout << param_header(p) << "inertia_s = " << fmt17(m.inertia) << "\n"
            << "omega_theta_rad_s = " << fmt17(m.omega_theta) << "\n"
            << "xi_theta_rad_s = " << fmt17(m.xi_theta) << "\n"
            << "theta_bar = " << fmt17(m.theta_bar) << "\n"
            << "c2_over_q = " << fmt17(rep.ratio_c2_q) << "\n"
            << "rotor_bound_2n2 = " << fmt17(rep.bound_2n2) << "\n"
            << "regime_ok = " << (rep.ok() ? 1 : 0) << "\n";
  if (strict && !rep.ok()) {
    std::cerr << "error: parameters outside the rotor regime (margin "
              << fmt17(margin) << ")\n";
    return kExitRegime;
  }
  return kExitOk;
}

int cmd_steady(const ParamArgs& pa, const std::string& out_path) {
  const PhysicalParams p = pa.load();
  const RotorModel m = build_rotor(p);
  const SteadyState s = solve_steady(p, m);
  emit(out_path, steady_csv(p, s));
  return kExitOk;
}

int cmd_spectrum(const ParamArgs& pa, double min_hz, double max_hz, int points,
                 bool log_grid, const std::string& out_path) {
  if (points < 2) throw ConfigError("spectrum needs at least 2 points");
  if (points > 1000000) throw ConfigError("spectrum grid capped at 1e6 points");
  if (!(max_hz > min_hz)) throw ConfigError("need max_hz > min_hz");
  if (log_grid && !(min_hz > 0)) throw ConfigError("log grid needs min_hz > 0");
  const PhysicalParams p = pa.load();
  const RotorModel m = build_rotor(p);
  const SteadyState s = solve_steady(p, m);
  std::vector<double> omegas(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double u = static_cast<double>(i) / (points - 1);
    const double hz = log_grid ? min_hz * std::pow(max_hz / min_hz, u)
                               : min_hz + (max_hz - min_hz) * u;
    omegas[static_cast<std::size_t>(i)] = kTwoPi * hz;
  }
  emit(out_path, spectrum_csv(p, evaluate_spectrum(p, m, s, omegas)));
  return kExitOk;
}

int cmd_moments(const ParamArgs& pa, double t_end, double dt, std::size_t stride,
                double theta2_0, double l2_0, double sym_0,
                const std::string& out_path) {
  const PhysicalParams p = pa.load();
  const RotorModel m = build_rotor(p);
  const SteadyState s = solve_steady(p, m);
  if (dt <= 0) {
    const double rate = std::max({s.omega_eff, p.d_theta / m.inertia});
    dt = 0.02 / rate;
  }
  MomentState init;
  init.theta2 = theta2_0;
  init.l2 = l2_0;
  init.sym = sym_0;
  emit(out_path, moments_csv(p, integrate_moments(init, p, m, s, t_end, dt, stride)));
  return kExitOk;
}

int cmd_sweep(const ParamArgs& pa, SweepSpec spec, const std::string& temps_csv,
              const std::string& out_path, const std::string& plot_path,
              bool strict) {
  const PhysicalParams p = pa.load();
  if (!temps_csv.empty()) {
    std::size_t pos = 0;
    while (pos <= temps_csv.size()) {
      const auto comma = temps_csv.find(',', pos);
      const std::string item =
          temps_csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                           : comma - pos);
      if (item.empty()) throw ConfigError("empty entry in --temperatures_k");
      try {
        std::size_t used = 0;
        spec.temperatures.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ConfigError("bad temperature value: " + item);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  const std::vector<SweepRow> rows = run_sweep(p, spec);
  emit(out_path, sweep_csv(p, spec, rows));
  if (!plot_path.empty()) write_text_file(plot_path, sweep_plot_svg(spec, rows));

  bool any_stable = false, all_regime = true;
  for (const auto& r : rows) {
    any_stable = any_stable || r.stable;
    all_regime = all_regime && r.regime_ok;
  }
  if (!any_stable) {
    std::cerr << "error: every sweep point is anti-trapping or unstable\n";
    return kExitRegime;
  }
  if (strict && !all_regime) {
    std::cerr << "error: sweep leaves the validated rotor regime (--strict)\n";
    return kExitRegime;
  }
  return kExitOk;
}

int cmd_simulate(const ParamArgs& pa, double t_end, double dt, std::uint64_t seed,
                 int trajectories, const std::string& noise, bool vacuum,
                 bool quartic, double theta0, double lz0, double a0_re,
                 double a0_im, bool a0_given, const std::string& out_path,
                 const std::string& psd_path, std::size_t segment,
                 const std::string& window_name, double transient, int jobs) {
  const PhysicalParams p = pa.load();
  const RotorModel m = build_rotor(p);
  const SteadyState s = solve_steady(p, m);

  SimConfig cfg;
  cfg.t_end = t_end;
  cfg.seed = seed;
  cfg.n_trajectories = trajectories;
  if (noise == "deterministic")
    cfg.noise_mode = NoiseMode::deterministic;
  else if (noise == "white")
    cfg.noise_mode = NoiseMode::classical_white;
  else if (noise == "colored")
    cfg.noise_mode = NoiseMode::quantum_colored;
  else
    throw ConfigError("unknown noise mode: " + noise);
  cfg.include_vacuum_input = vacuum;
  cfg.include_quartic = quartic;
  cfg.theta0 = theta0;
  cfg.l_z0 = lz0;
  cfg.a0 = a0_given ? std::complex<double>(a0_re, a0_im) : s.a_s;
  if (dt <= 0) {
    const double rate = std::max({s.omega_eff, p.d_theta / m.inertia, p.gamma,
                                  std::abs(p.delta)});
    dt = 0.02 / rate;
  }
  cfg.dt = dt;

  PsdWindow window = PsdWindow::hann;
  if (window_name == "none")
    window = PsdWindow::none;
  else if (window_name != "hann")
    throw ConfigError("unknown window: " + window_name);

  if (!psd_path.empty()) {
    const auto pts = simulate_ensemble_psd(p, m, s, cfg, segment, window,
                                           transient, jobs);
    std::vector<double> omega(pts.size()), psd(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
      omega[k] = pts[k].omega;
      psd[k] = pts[k].s_theta;
    }
    write_text_file(psd_path, psd_csv(p, omega, psd));
  }
  if (psd_path.empty() || !out_path.empty())
    emit(out_path, trajectory_csv(p, integrate_trajectory(p, m, s, cfg, 0)));
  return kExitOk;
}

int cmd_exactdiag(const ParamArgs& pa, int n, int k, const std::string& out_path) {
  // Standalone --c2_hz/--q_hz are enough here; a full config also works.
  double c2 = 0, q = 0;
  if (!pa.config_path.empty()) {
    const PhysicalParams p = pa.load();
    c2 = p.c2;
    q = p.q;
  } else {
    bool have_c2 = false, have_q = false;
    auto take = [&](const std::string& key, const std::string& value) {
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(value, &used);
      } catch (const std::exception&) {
        throw ConfigError("bad value for " + key + ": " + value);
      }
      if (used != value.size())
        throw ConfigError("bad value for " + key + ": " + value);
      if (key == "c2_hz") {
        c2 = kTwoPi * v;
        have_c2 = true;
      } else if (key == "q_hz") {
        q = kTwoPi * v;
        have_q = true;
      } else {
        throw ConfigError("exactdiag only uses c2_hz and q_hz, got " + key);
      }
    };
    for (const auto& s : pa.sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos)
        throw ConfigError("--set expects key=value, got: " + s);
      take(s.substr(0, eq), s.substr(eq + 1));
    }
    for (const auto& [key, value] : pa.flag_values) take(key, value);
    if (!have_c2 || !have_q)
      throw ConfigError("exactdiag needs --config or both --c2_hz and --q_hz");
  }
  const SpinorSpectrum spec = exact_spinor_spectrum(n, c2, q, k);
  emit(out_path, exactdiag_csv(n, c2, q, spec));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cavity-coupled spin-1 condensate rotor toolkit"};
  app.require_subcommand(1);

  ParamArgs pa_validate, pa_steady, pa_spectrum, pa_moments, pa_sweep,
      pa_simulate, pa_exactdiag;

  auto* validate = app.add_subcommand(
      "validate", "check parameters and print the rotor reduction");
  pa_validate.attach(validate);
  double val_margin = 10.0;
  bool val_strict = false;
  validate->add_option("--margin", val_margin, "separation margin for the regime check");
  validate->add_flag("--strict", val_strict, "exit 2 when outside the rotor regime");

  auto* steady = app.add_subcommand("steady", "mean-field steady state CSV");
  pa_steady.attach(steady);
  std::string steady_out;
  steady->add_option("-o,--out", steady_out, "output CSV path (default stdout)");

  auto* spectrum =
      app.add_subcommand("spectrum", "linear-response and noise spectra CSV");
  pa_spectrum.attach(spectrum);
  double sp_min = 0, sp_max = 0;
  int sp_points = 1000;
  bool sp_log = false;
  std::string sp_out;
  spectrum->add_option("--min_hz", sp_min, "grid start, Hz")->required();
  spectrum->add_option("--max_hz", sp_max, "grid end, Hz")->required();
  spectrum->add_option("--points", sp_points, "grid size (default 1000)");
  spectrum->add_flag("--log", sp_log, "logarithmic grid");
  spectrum->add_option("-o,--out", sp_out, "output CSV path (default stdout)");

  auto* moments =
      app.add_subcommand("moments", "second-moment relaxation CSV");
  pa_moments.attach(moments);
  double mo_tend = 0, mo_dt = -1, mo_theta2 = 0, mo_l2 = 0, mo_sym = 0;
  std::size_t mo_stride = 1;
  std::string mo_out;
  moments->add_option("--t_end_s", mo_tend, "integration time, s")->required();
  moments->add_option("--dt_s", mo_dt, "RK4 step, s (default from rates)");
  moments->add_option("--stride", mo_stride, "record every n-th step");
  moments->add_option("--theta2_0", mo_theta2, "initial <theta^2>");
  moments->add_option("--l2_0", mo_l2, "initial <L_z^2>");
  moments->add_option("--sym_0", mo_sym, "initial <theta L_z + L_z theta>");
  moments->add_option("-o,--out", mo_out, "output CSV path (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "parameter sweep CSV (+ SVG plot)");
  pa_sweep.attach(sweep);
  SweepSpec sw_spec;
  std::string sw_axis = "delta_over_gamma", sw_temps, sw_out, sw_plot;
  bool sw_strict = false;
  int sw_jobs = 0;
  sweep->add_option("--axis", sw_axis,
                    "delta_over_gamma | q_over_c2 | kappa_l_hz | temperature_k");
  sweep->add_option("--start", sw_spec.start, "axis start (default -10)");
  sweep->add_option("--stop", sw_spec.stop, "axis stop (default 10)");
  sweep->add_option("--points", sw_spec.points, "grid size (default 401)");
  sweep->add_option("--temperatures_k", sw_temps,
                    "comma-separated kelvin list (one curve each)");
  sweep->add_option("--margin", sw_spec.margin, "regime-check margin (default 10)");
  sweep->add_option("--jobs", sw_jobs, "worker threads (default $ROTORCOM_JOBS or 1)");
  sweep->add_option("-o,--out", sw_out, "output CSV path (default stdout)");
  sweep->add_option("--plot", sw_plot, "also write an SVG plot here");
  sweep->add_flag("--strict", sw_strict, "exit 2 when any point leaves the regime");

  auto* simulate =
      app.add_subcommand("simulate", "stochastic trajectories / ensemble PSD");
  pa_simulate.attach(simulate);
  double si_tend = 0, si_dt = -1, si_theta0 = 0, si_lz0 = 0, si_a0re = 0,
         si_a0im = 0, si_transient = 0;
  std::uint64_t si_seed = 0;
  int si_traj = 1, si_jobs = 0;
  std::size_t si_segment = 4096;
  std::string si_noise = "colored", si_window = "hann", si_out, si_psd;
  bool si_vacuum = false, si_quartic = false;
  simulate->add_option("--t_end_s", si_tend, "trajectory length, s")->required();
  simulate->add_option("--dt_s", si_dt, "Heun step, s (default from rates)");
  simulate->add_option("--seed", si_seed, "base RNG seed (default 0)");
  simulate->add_option("--trajectories", si_traj, "ensemble size (default 1)");
  simulate->add_option("--noise", si_noise, "deterministic | white | colored");
  simulate->add_flag("--vacuum", si_vacuum, "include cavity vacuum input noise");
  simulate->add_flag("--quartic", si_quartic, "include the quartic force term");
  simulate->add_option("--theta0", si_theta0, "initial angle");
  simulate->add_option("--lz0", si_lz0, "initial angular momentum");
  auto* a0re_opt = simulate->add_option("--a0_re", si_a0re,
                                        "initial field, real part (default a_s)");
  simulate->add_option("--a0_im", si_a0im, "initial field, imag part (default a_s)");
  simulate->add_option("-o,--out", si_out, "trajectory CSV path (default stdout)");
  simulate->add_option("--psd_out", si_psd, "ensemble Welch PSD CSV path");
  simulate->add_option("--segment", si_segment,
                       "Welch segment length, power of two (default 4096)");
  simulate->add_option("--window", si_window, "hann | none (default hann)");
  simulate->add_option("--transient_s", si_transient,
                       "discard samples before this time");
  simulate->add_option("--jobs", si_jobs, "worker threads (default $ROTORCOM_JOBS or 1)");

  auto* exactdiag = app.add_subcommand(
      "exactdiag", "exact few-atom spectrum of the spin Hamiltonian");
  pa_exactdiag.attach(exactdiag);
  int ed_n = 0, ed_k = 10;
  std::string ed_out;
  exactdiag->add_option("--n", ed_n, "atom number, 2..60")->required();
  exactdiag->add_option("--k", ed_k, "how many levels to emit (default 10)");
  exactdiag->add_option("-o,--out", ed_out, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (validate->parsed()) return cmd_validate(pa_validate, val_margin, val_strict);
    if (steady->parsed()) return cmd_steady(pa_steady, steady_out);
    if (spectrum->parsed())
      return cmd_spectrum(pa_spectrum, sp_min, sp_max, sp_points, sp_log, sp_out);
    if (moments->parsed())
      return cmd_moments(pa_moments, mo_tend, mo_dt, mo_stride, mo_theta2, mo_l2,
                         mo_sym, mo_out);
    if (sweep->parsed()) {
      sw_spec.axis = axis_from_name(sw_axis);
      sw_spec.jobs = sw_jobs > 0 ? sw_jobs : default_jobs();
      return cmd_sweep(pa_sweep, sw_spec, sw_temps, sw_out, sw_plot, sw_strict);
    }
    if (simulate->parsed())
      return cmd_simulate(pa_simulate, si_tend, si_dt, si_seed, si_traj, si_noise,
                          si_vacuum, si_quartic, si_theta0, si_lz0, si_a0re,
                          si_a0im, a0re_opt->count() > 0, si_out, si_psd,
                          si_segment, si_window, si_transient,
                          si_jobs > 0 ? si_jobs : default_jobs());
    if (exactdiag->parsed()) return cmd_exactdiag(pa_exactdiag, ed_n, ed_k, ed_out);
    std::cerr << "error: no subcommand\n";
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const AntiTrappingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRegime;
  } catch (const StabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRegime;
  } catch (const DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
