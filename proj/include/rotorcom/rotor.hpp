#pragma once

#include "rotorcom/params.hpp"

namespace rotorcom {

/// Quantum-rotor reduction of the spin-1 condensate: a torsional oscillator in the
/// director angle theta with [theta, L_z] = i.
struct RotorModel {
  double inertia = 0;      // I = N / c2  (seconds)
  double omega_theta = 0;  // sqrt(2 q c2 [1 + 3/(2N) + q/c2])
  double xi_theta = 0;     // optomechanical coupling U0 N [1 + 3/(2N) + q/c2]
  double theta_bar = 0;    // ground-state width, dimensional mode (I omega_theta)^(-1/2)
};

enum class WidthMode {
  dimensional,  // (I omega_theta)^(-1/2); default everywhere downstream
  leading_order  // closed form without the finite-N frequency correction: sqrt(c2 / (2 q N^2))
};

RotorModel build_rotor(const PhysicalParams& params);

/// V(theta) = q (N + 3/2) sin^2(theta) + (q^2 N / 8 c2) sin^2(2 theta), rad/s.
double potential_full(double theta, const PhysicalParams& params);

/// Harmonic expansion (1/2) I omega_theta^2 theta^2.
double potential_harmonic(double theta, const RotorModel& model);

/// Quartic coefficient beta = (q - U0 * photon_number) * N / 3 of the correction
/// -beta theta^4 to the effective potential.
double quartic_beta(const PhysicalParams& params, double photon_number);

double ground_state_width(const PhysicalParams& params,
                          WidthMode mode = WidthMode::dimensional);

/// |Psi_0(theta)|^2 = (pi theta_bar^2)^(-1/2) exp(-theta^2 / theta_bar^2);
/// integrates to 1 over the real line.
double ground_state_density(double theta, const PhysicalParams& params,
                            WidthMode mode = WidthMode::dimensional);

}  // namespace rotorcom
