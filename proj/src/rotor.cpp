#include "rotorcom/rotor.hpp"

#include <cmath>
#include <stdexcept>

namespace rotorcom {

RotorModel build_rotor(const PhysicalParams& params) {
  params.validate();
  const double n = static_cast<double>(params.n_atoms);
  // br collects the finite-size and finite-q corrections to the stiffness;
  // both enter omega_theta and the cavity coupling the same way.
  const double br = 1.0 + 1.5 / n + params.q / params.c2;
  RotorModel m;
  m.inertia = n / params.c2;
  m.omega_theta = std::sqrt(2.0 * params.q * params.c2 * br);
  m.xi_theta = params.u0 * n * br;
  m.theta_bar = 1.0 / std::sqrt(m.inertia * m.omega_theta);
  return m;
}

double potential_full(double theta, const PhysicalParams& params) {
  const double n = static_cast<double>(params.n_atoms);
  const double s = std::sin(theta);
  const double s2 = std::sin(2.0 * theta);
  return params.q * (n + 1.5) * s * s +
         params.q * params.q * n / (8.0 * params.c2) * s2 * s2;
}

double potential_harmonic(double theta, const RotorModel& model) {
  return 0.5 * model.inertia * model.omega_theta * model.omega_theta * theta * theta;
}

double quartic_beta(const PhysicalParams& params, double photon_number) {
  if (photon_number < 0) throw std::domain_error("photon_number must be >= 0");
  return (params.q - params.u0 * photon_number) * static_cast<double>(params.n_atoms) / 3.0;
}

double ground_state_width(const PhysicalParams& params, WidthMode mode) {
  if (mode == WidthMode::leading_order) {
    const double n = static_cast<double>(params.n_atoms);
    return std::sqrt(params.c2 / (2.0 * params.q * n * n));
  }
  return build_rotor(params).theta_bar;
}

double ground_state_density(double theta, const PhysicalParams& params,
                            WidthMode mode) {
  const double w = ground_state_width(params, mode);
  const double pi = 3.14159265358979323846;
  return std::exp(-theta * theta / (w * w)) / std::sqrt(pi * w * w);
}

}  // namespace rotorcom
