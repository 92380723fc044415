#pragma once

#include "rotorcom/constants.hpp"
#include "rotorcom/params.hpp"
#include "rotorcom/rng.hpp"
#include "rotorcom/rotor.hpp"
#include "rotorcom/steady_state.hpp"

namespace testing {

// Strongly driven, strongly enhanced reference point (eta ~ 4.2e3).
inline rotorcom::PhysicalParams reference_params(double temperature = 5e-10) {
  rotorcom::PhysicalParams p;
  p.c2 = rotorcom::kTwoPi * 20.0;
  p.q = rotorcom::kTwoPi * 0.02;
  p.n_atoms = 100000;
  p.u0 = rotorcom::kTwoPi * 100.0;
  p.gamma = rotorcom::kTwoPi * 5e4;
  p.kappa_l = rotorcom::kTwoPi * 3e6;
  p.delta = 0.0;
  p.d_theta = 0.0;
  p.temperature = temperature;
  return p;
}

// Small fast system (eta = 2 exactly at delta = 0); convenient for dynamics
// tests where the reference point's 4e3 frequency contrast is too stiff.
inline rotorcom::PhysicalParams compact_params(double temperature = 1e-7) {
  rotorcom::PhysicalParams p;
  p.c2 = rotorcom::kTwoPi * 20.0;
  p.q = rotorcom::kTwoPi * 2.0;
  p.n_atoms = 1000;
  p.u0 = rotorcom::kTwoPi * 0.06;
  p.gamma = rotorcom::kTwoPi * 200.0;
  p.kappa_l = rotorcom::kTwoPi * 2000.0;
  p.delta = 0.0;
  p.d_theta = 0.0;
  p.temperature = temperature;
  return p;
}

// Log-uniform random parameter draw; always trapping (u0 > 0) and strictly
// stable (d_theta > 0). damp_frac sets D/(I omega_eff).
inline rotorcom::PhysicalParams random_stable_params(rotorcom::GaussianStream& rng,
                                                     double damp_frac_min = 1e-3,
                                                     double damp_frac_max = 0.2) {
  using std::pow;
  rotorcom::PhysicalParams p;
  p.c2 = rotorcom::kTwoPi * pow(10.0, 2.0 * rng.uniform());
  p.q = p.c2 / pow(10.0, 1.0 + 2.5 * rng.uniform());
  p.n_atoms = static_cast<std::int64_t>(pow(10.0, 2.0 + 3.0 * rng.uniform()));
  p.u0 = rotorcom::kTwoPi * pow(10.0, -2.0 + 3.0 * rng.uniform());
  p.gamma = rotorcom::kTwoPi * pow(10.0, 2.0 + 3.0 * rng.uniform());
  p.kappa_l = rotorcom::kTwoPi * pow(10.0, 5.0 * rng.uniform());
  p.delta = p.gamma * (6.0 * rng.uniform() - 3.0);
  p.temperature = pow(10.0, -10.0 + 4.0 * rng.uniform());
  p.d_theta = 0.0;
  const rotorcom::RotorModel model = rotorcom::build_rotor(p);
  const double omega_eff = rotorcom::effective_frequency(p, model);
  const double lf = std::log10(damp_frac_min) +
                    (std::log10(damp_frac_max) - std::log10(damp_frac_min)) *
                        rng.uniform();
  p.d_theta = pow(10.0, lf) * model.inertia * omega_eff;
  return p;
}

}  // namespace testing
