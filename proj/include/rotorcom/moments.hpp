#pragma once

#include <cstddef>
#include <vector>

#include "rotorcom/params.hpp"
#include "rotorcom/rotor.hpp"
#include "rotorcom/steady_state.hpp"

namespace rotorcom {

/// Second moments of the rotor: theta2 = <theta^2>, l2 = <L_z^2>,
/// sym = <theta L_z + L_z theta>.
struct MomentState {
  double theta2 = 0;
  double l2 = 0;
  double sym = 0;
  double t = 0;
};

/// Closed linear system (adiabatically eliminated cavity):
///   d theta2 = sym / I
///   d l2     = -(I w_th^2 + 2 xi |a_s|^2) sym - 2 (D/I) l2 + 2 D (n + 1/2) w_th
///   d sym    = 2 l2 / I - 2 (I w_th^2 + 2 xi |a_s|^2) theta2 - (D/I) sym
MomentState moment_rhs(const MomentState& state, const PhysicalParams& params,
                       const RotorModel& model, const SteadyState& steady);

/// Fixed point: sym = 0, l2 = I w_th (n + 1/2), theta2 = (n + 1/2) w_th / (I w_eff^2).
/// Throws StabilityError when the linearized system is not strictly stable.
MomentState steady_moments(const PhysicalParams& params, const RotorModel& model,
                           const SteadyState& steady);

/// Classical fixed-step RK4.  Requires dt <= 0.05 / max(omega_eff, d_theta/I)
/// (ConfigError otherwise).  Returns the state every record_stride steps,
/// initial state included.
std::vector<MomentState> integrate_moments(const MomentState& initial,
                                           const PhysicalParams& params,
                                           const RotorModel& model,
                                           const SteadyState& steady, double t_end,
                                           double dt, std::size_t record_stride = 1);

/// Bose occupation 1 / (exp(omega / (k_B T / hbar)) - 1); 0 at T = 0.
/// Stable for omega / (k_B T / hbar) down past 1e-12 (expm1).
double thermal_occupation(double omega, double temperature);

/// E_Q = l2 / 2I + I omega_theta^2 theta2 / 2 (bare frequency).
double rotor_energy(const MomentState& state, const RotorModel& model);

/// nbar = (n + 1/2)(eta^2 + 1) / (2 eta^3); equals E_Q / omega_eff at the fixed
/// point. Requires eta >= 1 (std::domain_error; cannot occur for U0 > 0).
double roton_occupation(double n_thermal, double eta);

}  // namespace rotorcom
