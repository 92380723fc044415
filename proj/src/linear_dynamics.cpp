#include "rotorcom/linear_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace rotorcom {

namespace {

// Effective torsional stiffness I omega_eff^2 = I omega_theta^2 + 2 xi |a_s|^2,
// valid whether or not the enhancement fields of `steady` were filled in.
double stiffness(const RotorModel& model, const SteadyState& steady) {
  return model.inertia * model.omega_theta * model.omega_theta +
         2.0 * model.xi_theta * steady.photon_number;
}

}  // namespace

DriftMatrix build_drift(const PhysicalParams& params, const RotorModel& model,
                        const SteadyState& steady) {
  DriftMatrix d;
  d.r(0, 1) = 1.0 / model.inertia;
  d.r(1, 0) = -stiffness(model, steady);
  d.r(1, 1) = -params.d_theta / model.inertia;
  d.r(2, 2) = -params.gamma;
  d.r(2, 3) = -params.delta;
  d.r(3, 2) = params.delta;
  d.r(3, 3) = -params.gamma;
  return d;
}

std::array<double, 4> drift_char_poly(const DriftMatrix& drift) {
  // Faddeev-LeVerrier: det(sI - R) = s^4 + c1 s^3 + c2 s^2 + c3 s + c4
  const Eigen::Matrix4d& r = drift.r;
  Eigen::Matrix4d m = r;
  const double c1 = -m.trace();
  m = r * (m + c1 * Eigen::Matrix4d::Identity());
  const double c2 = -m.trace() / 2.0;
  m = r * (m + c2 * Eigen::Matrix4d::Identity());
  const double c3 = -m.trace() / 3.0;
  m = r * (m + c3 * Eigen::Matrix4d::Identity());
  const double c4 = -m.trace() / 4.0;
  return {c1, c2, c3, c4};
}

double char_poly_scale(const std::array<double, 4>& coeffs) {
  const auto [a3, a2, a1, a0] = coeffs;
  double rho = std::abs(a3);
  rho = std::max(rho, std::sqrt(std::abs(a2)));
  rho = std::max(rho, std::cbrt(std::abs(a1)));
  rho = std::max(rho, std::sqrt(std::sqrt(std::abs(a0))));
  return 1.0 + rho;
}

bool stable_routh_hurwitz(const DriftMatrix& drift) {
  const auto coeffs = drift_char_poly(drift);
  const auto [a3, a2, a1, a0] = coeffs;
  // Strictness margins scale with the coefficient dimensions (rho, rho^3,
  // rho^4, rho^6), rho the root-magnitude bound of the polynomial itself, so a
  // marginal spectral pair reports unstable instead of flapping on rounding.
  const double rho = char_poly_scale(coeffs);
  const double tol = 1e-12;
  if (!(a3 > tol * rho)) return false;
  if (!(a1 > tol * rho * rho * rho)) return false;
  if (!(a0 > tol * rho * rho * rho * rho)) return false;
  const double lc = a3 * a2 * a1 - a1 * a1 - a3 * a3 * a0;
  return lc > tol * rho * rho * rho * rho * rho * rho;
}

std::array<std::complex<double>, 4> drift_eigenvalues(const DriftMatrix& drift) {
  Eigen::EigenSolver<Eigen::Matrix4d> solver(drift.r, false);
  std::array<std::complex<double>, 4> ev;
  for (int i = 0; i < 4; ++i) ev[i] = solver.eigenvalues()[i];
  std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return ev;
}

std::complex<double> susceptibility(double omega, const PhysicalParams& params,
                                    const RotorModel& model,
                                    const SteadyState& steady) {
  const double stiff = stiffness(model, steady);
  const double re = stiff - model.inertia * omega * omega;
  const double im = -params.d_theta * omega;
  if (re == 0 && im == 0)
    throw std::domain_error("susceptibility pole: undamped rotor driven on resonance");
  return 1.0 / std::complex<double>(re, im);
}

double noise_spectrum_epsilon(double omega, double d_theta, double temperature) {
  if (d_theta < 0) throw std::domain_error("d_theta must be >= 0");
  const double w_t = thermal_frequency(temperature);
  if (w_t == 0) return omega > 0 ? 2.0 * d_theta * omega : 0.0;
  if (omega == 0) return 2.0 * d_theta * w_t;
  // D w [1 + coth(w / 2 w_T)] = -2 D w / expm1(-w / w_T), stable for |w| << w_T
  // and decaying (not 0/0) on the deeply negative side.
  return -2.0 * d_theta * omega / std::expm1(-omega / w_t);
}

double theta_spectrum(double omega, const PhysicalParams& params,
                      const RotorModel& model, const SteadyState& steady) {
  return std::norm(susceptibility(omega, params, model, steady)) *
         noise_spectrum_epsilon(omega, params.d_theta, params.temperature);
}

QuadratureResponse quadrature_response(double omega, const PhysicalParams& params) {
  const std::complex<double> gm(params.gamma, -omega);
  const std::complex<double> den = params.delta * params.delta + gm * gm;
  const double root = std::sqrt(2.0 * params.gamma);
  QuadratureResponse resp;
  resp.t_self = root * gm / den;
  resp.t_cross = root * params.delta / den;
  const double total = std::norm(resp.t_self) + std::norm(resp.t_cross);
  resp.s_x1 = total / 2.0;
  resp.s_x2 = total / 2.0;
  return resp;
}

std::vector<SpectrumPoint> evaluate_spectrum(const PhysicalParams& params,
                                             const RotorModel& model,
                                             const SteadyState& steady,
                                             const std::vector<double>& omegas) {
  std::vector<SpectrumPoint> out;
  out.reserve(omegas.size());
  for (double w : omegas) {
    SpectrumPoint pt;
    pt.omega = w;
    pt.chi = susceptibility(w, params, model, steady);
    pt.s_theta = std::norm(pt.chi) *
                 noise_spectrum_epsilon(w, params.d_theta, params.temperature);
    const QuadratureResponse qr = quadrature_response(w, params);
    pt.s_x1 = qr.s_x1;
    pt.s_x2 = qr.s_x2;
    out.push_back(pt);
  }
  return out;
}

}  // namespace rotorcom
