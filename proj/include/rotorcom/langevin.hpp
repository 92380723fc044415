#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "rotorcom/linear_dynamics.hpp"
#include "rotorcom/params.hpp"
#include "rotorcom/rotor.hpp"
#include "rotorcom/steady_state.hpp"

namespace rotorcom {

enum class NoiseMode { deterministic, classical_white, quantum_colored };
enum class PsdWindow { none, hann };

struct SimConfig {
  double t_end = 0;
  double dt = 0;
  std::uint64_t seed = 0;
  int n_trajectories = 1;
  NoiseMode noise_mode = NoiseMode::quantum_colored;
  bool include_vacuum_input = false;
  bool include_quartic = false;
  double theta0 = 0;
  double l_z0 = 0;
  std::complex<double> a0{0, 0};
};

struct TrajectoryRecord {
  double t = 0;
  double theta = 0;
  double l_z = 0;
  std::complex<double> a{0, 0};
};

/// Real Gaussian sequence whose ensemble periodogram converges to the
/// symmetrized spectrum S_sym(w) = [S(w) + S(-w)]/2 on the band [-pi/dt, pi/dt].
/// Frequency-domain shaping: Hermitian spectrum with amplitude
/// sqrt(n S_sym(w_k) / dt), inverse FFT.  n_samples must be a power of two
/// (std::invalid_argument); a negative S value raises std::domain_error.
/// PSD convention: integral of S over the band / 2 pi = variance.
std::vector<double> generate_colored_noise(const std::function<double(double)>& spectrum,
                                           double dt, std::size_t n_samples,
                                           std::uint64_t seed);

/// Heun (stochastic predictor-corrector, additive noise) integration of
///   theta' = L_z / I
///   L_z'   = -I w_th^2 theta - 2 xi |a|^2 theta - (D/I) L_z + eps(t) [+ 4 beta theta^3]
///   a'     = -i (-Delta + xi theta^2) a - gamma a + kappa_L [+ sqrt(2 gamma) zeta(t)]
/// The record at index j is the state at t = j dt; n_steps + 1 records.
/// Trajectory index 0 of config.seed is used; DivergenceError on non-finite state.
std::vector<TrajectoryRecord> integrate_trajectory(const PhysicalParams& params,
                                                   const RotorModel& model,
                                                   const SteadyState& steady,
                                                   const SimConfig& config,
                                                   int trajectory_index = 0);

/// Welch periodogram of one real series: 50%-overlap segments of length
/// segment_len (power of two), optional Hann taper, two-sided PSD values on the
/// one-sided grid w_k = 2 pi k / (segment_len dt), k = 0..segment_len/2.
std::vector<SpectrumPoint> welch_psd(const std::vector<double>& x, double dt,
                                     std::size_t segment_len, PsdWindow window);

/// Ensemble-averaged Welch PSD of theta(t) over recorded trajectories; samples
/// with t < transient_time are discarded.  Needs >= 2 segments per trajectory
/// after the discard (ConfigError).
std::vector<SpectrumPoint> ensemble_theta_psd(
    const std::vector<std::vector<TrajectoryRecord>>& trajectories, double dt,
    std::size_t segment_len, PsdWindow window, double transient_time);

/// Memory-light ensemble driver: integrates config.n_trajectories trajectories
/// (theta only), discards the transient, accumulates Welch periodograms.
/// Deterministic for any jobs count: per-trajectory results are reduced in
/// trajectory-index order.
std::vector<SpectrumPoint> simulate_ensemble_psd(const PhysicalParams& params,
                                                 const RotorModel& model,
                                                 const SteadyState& steady,
                                                 const SimConfig& config,
                                                 std::size_t segment_len,
                                                 PsdWindow window,
                                                 double transient_time, int jobs = 1);

/// Ensemble + time average of theta^2 after the transient (same stepper).
double ensemble_theta_variance(const PhysicalParams& params, const RotorModel& model,
                               const SteadyState& steady, const SimConfig& config,
                               double transient_time, int jobs = 1);

}  // namespace rotorcom
