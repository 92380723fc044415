#pragma once

#include <complex>

#include "rotorcom/params.hpp"
#include "rotorcom/rotor.hpp"

namespace rotorcom {

struct SteadyState {
  std::complex<double> a_s{0, 0};  // kappa_L / (gamma - i Delta)
  double photon_number = 0;        // |a_s|^2
  double eta = 0;                  // trapping enhancement factor
  double omega_eff = 0;            // eta * omega_theta
  double theta_s = 0;              // rotor fixed point (always 0 for U0 > 0)
  double l_z_s = 0;
};

/// Cavity field for the theta = 0 fixed point. Fills a_s and photon_number only
/// (eta, omega_eff left NaN); never throws for valid params.
SteadyState cavity_steady_field(const PhysicalParams& params);

/// eta = sqrt(1 + (U0/q) kappa_L^2 / (Delta^2 + gamma^2)).
/// Throws AntiTrappingError when the radicand is negative (U0 < 0, strong drive).
double enhancement_factor(const PhysicalParams& params);

/// omega_eff = eta * omega_theta.
double effective_frequency(const PhysicalParams& params, const RotorModel& model);

/// Fully populated steady state (field + enhancement).
SteadyState solve_steady(const PhysicalParams& params, const RotorModel& model);

}  // namespace rotorcom
