#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "rotorcom/params.hpp"
#include "rotorcom/rotor.hpp"
#include "rotorcom/steady_state.hpp"

namespace rotorcom {

/// Linearized drift about the steady state, variable order
/// (d theta, d L_z, d X1, d X2).  Block diagonal: the cavity quadratures do not
/// feed back on the rotor at linear order (quadratic coupling).
struct DriftMatrix {
  Eigen::Matrix4d r = Eigen::Matrix4d::Zero();
};

struct SpectrumPoint {
  double omega = 0;
  std::complex<double> chi{0, 0};
  double s_theta = 0;
  double s_x1 = 0;
  double s_x2 = 0;
};

struct QuadratureResponse {
  std::complex<double> t_self{0, 0};   // sqrt(2 gamma) (gamma - i w) / (Delta^2 + (gamma - i w)^2)
  std::complex<double> t_cross{0, 0};  // +- sqrt(2 gamma) Delta / (same denominator)
  double s_x1 = 0;                     // (|t_self|^2 + |t_cross|^2) / 2, vacuum input
  double s_x2 = 0;
};

DriftMatrix build_drift(const PhysicalParams& params, const RotorModel& model,
                        const SteadyState& steady);

/// Coefficients {a3, a2, a1, a0} of det(s I - R) = s^4 + a3 s^3 + a2 s^2 + a1 s + a0.
std::array<double, 4> drift_char_poly(const DriftMatrix& drift);

/// Root-magnitude bound 1 + max(|a3|, |a2|^(1/2), |a1|^(1/3), |a0|^(1/4)); the
/// rate scale against which the stability margins are measured.
double char_poly_scale(const std::array<double, 4>& coeffs);

/// Lienard-Chipart conditions a3 > 0, a1 > 0, a0 > 0, a3 a2 a1 > a1^2 + a3^2 a0,
/// evaluated strictly: any condition within 1e-12 of marginal (measured against
/// the char_poly_scale power matching its dimension) reports unstable.
bool stable_routh_hurwitz(const DriftMatrix& drift);

/// Eigenvalues sorted by descending real part (ties by descending imaginary part).
std::array<std::complex<double>, 4> drift_eigenvalues(const DriftMatrix& drift);

/// chi(w) = 1 / (I (omega_eff^2 - w^2) - i D_theta w).
/// Throws std::domain_error on an exact pole (d_theta == 0 and |w| == omega_eff).
std::complex<double> susceptibility(double omega, const PhysicalParams& params,
                                    const RotorModel& model, const SteadyState& steady);

/// S_eps(w) = D_theta w [1 + coth(w / (2 k_B T / hbar))], with the T -> 0 and
/// w -> 0 limits taken analytically.  Not symmetric in w (detailed balance).
double noise_spectrum_epsilon(double omega, double d_theta, double temperature);

/// S_theta(w) = |chi(w)|^2 S_eps(w).
double theta_spectrum(double omega, const PhysicalParams& params,
                      const RotorModel& model, const SteadyState& steady);

QuadratureResponse quadrature_response(double omega, const PhysicalParams& params);

std::vector<SpectrumPoint> evaluate_spectrum(const PhysicalParams& params,
                                             const RotorModel& model,
                                             const SteadyState& steady,
                                             const std::vector<double>& omegas);

}  // namespace rotorcom
