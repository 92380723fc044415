#include "rotorcom/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rotorcom/errors.hpp"
#include "rotorcom/linear_dynamics.hpp"

namespace rotorcom {

namespace {

double stiffness(const RotorModel& model, const SteadyState& steady) {
  return model.inertia * model.omega_theta * model.omega_theta +
         2.0 * model.xi_theta * steady.photon_number;
}

}  // namespace

MomentState moment_rhs(const MomentState& state, const PhysicalParams& params,
                       const RotorModel& model, const SteadyState& steady) {
  const double stiff = stiffness(model, steady);
  const double damp = params.d_theta / model.inertia;
  const double n = thermal_occupation(model.omega_theta, params.temperature);
  MomentState d;
  d.theta2 = state.sym / model.inertia;
  d.l2 = -stiff * state.sym - 2.0 * damp * state.l2 +
         2.0 * params.d_theta * (n + 0.5) * model.omega_theta;
  d.sym = 2.0 * state.l2 / model.inertia - 2.0 * stiff * state.theta2 - damp * state.sym;
  d.t = 1.0;
  return d;
}

MomentState steady_moments(const PhysicalParams& params, const RotorModel& model,
                           const SteadyState& steady) {
  if (!stable_routh_hurwitz(build_drift(params, model, steady)))
    throw StabilityError("no relaxation: linearized dynamics are not strictly stable");
  const double n = thermal_occupation(model.omega_theta, params.temperature);
  MomentState s;
  s.sym = 0;
  s.l2 = model.inertia * model.omega_theta * (n + 0.5);
  s.theta2 = (n + 0.5) * model.omega_theta / stiffness(model, steady);
  s.t = 0;
  return s;
}

std::vector<MomentState> integrate_moments(const MomentState& initial,
                                           const PhysicalParams& params,
                                           const RotorModel& model,
                                           const SteadyState& steady, double t_end,
                                           double dt, std::size_t record_stride) {
  if (!(dt > 0) || !(t_end >= 0)) throw ConfigError("need dt > 0 and t_end >= 0");
  if (record_stride < 1) throw ConfigError("record_stride must be >= 1");
  const double stiff = stiffness(model, steady);
  const double rate =
      std::max(std::sqrt(std::max(stiff, 0.0) / model.inertia),
               params.d_theta / model.inertia);
  if (rate > 0 && dt > 0.05 / rate)
    throw ConfigError("dt too coarse for RK4: need dt <= " +
                      std::to_string(0.05 / rate));

  const std::size_t n_steps =
      static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
  std::vector<MomentState> history;
  history.reserve(n_steps / record_stride + 2);
  MomentState y = initial;
  history.push_back(y);

  auto axpy = [](const MomentState& a, double h, const MomentState& b) {
    MomentState r;
    r.theta2 = a.theta2 + h * b.theta2;
    r.l2 = a.l2 + h * b.l2;
    r.sym = a.sym + h * b.sym;
    r.t = a.t + h * b.t;
    return r;
  };

  for (std::size_t j = 1; j <= n_steps; ++j) {
    const MomentState k1 = moment_rhs(y, params, model, steady);
    const MomentState k2 = moment_rhs(axpy(y, dt / 2, k1), params, model, steady);
    const MomentState k3 = moment_rhs(axpy(y, dt / 2, k2), params, model, steady);
    const MomentState k4 = moment_rhs(axpy(y, dt, k3), params, model, steady);
    y.theta2 += dt / 6 * (k1.theta2 + 2 * k2.theta2 + 2 * k3.theta2 + k4.theta2);
    y.l2 += dt / 6 * (k1.l2 + 2 * k2.l2 + 2 * k3.l2 + k4.l2);
    y.sym += dt / 6 * (k1.sym + 2 * k2.sym + 2 * k3.sym + k4.sym);
    y.t = initial.t + static_cast<double>(j) * dt;
    if (j % record_stride == 0 || j == n_steps) history.push_back(y);
  }
  return history;
}

double thermal_occupation(double omega, double temperature) {
  if (!(omega > 0)) throw std::domain_error("omega must be positive");
  const double w_t = thermal_frequency(temperature);
  if (w_t == 0) return 0;
  return 1.0 / std::expm1(omega / w_t);
}

double rotor_energy(const MomentState& state, const RotorModel& model) {
  return state.l2 / (2.0 * model.inertia) +
         0.5 * model.inertia * model.omega_theta * model.omega_theta * state.theta2;
}

double roton_occupation(double n_thermal, double eta) {
  if (!(eta >= 1))
    throw std::domain_error("eta must be >= 1 (no softening below the bare mode)");
  return (n_thermal + 0.5) * (eta * eta + 1.0) / (2.0 * eta * eta * eta);
}

}  // namespace rotorcom
