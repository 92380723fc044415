#include "rotorcom/langevin.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "rotorcom/constants.hpp"
#include "rotorcom/errors.hpp"
#include "rotorcom/rng.hpp"

namespace rotorcom {

namespace {

bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 2;
  while (p < n) p <<= 1;
  return p;
}

// Frequency-domain synthesis on an existing Gaussian stream. Draw order is
// part of the reproducibility contract: DC, then (re, im) for each interior
// bin, then Nyquist.
std::vector<double> colored_noise_impl(const std::function<double(double)>& spectrum,
                                       double dt, std::size_t n,
                                       GaussianStream& stream) {
  if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
  if (!is_pow2(n)) throw std::invalid_argument("n_samples must be a power of two >= 2");
  auto s_sym = [&](std::size_t k) {
    const double w = kTwoPi * static_cast<double>(k) / (static_cast<double>(n) * dt);
    const double v = 0.5 * (spectrum(w) + spectrum(-w));
    if (v < 0 || !std::isfinite(v))
      throw std::domain_error("noise spectrum must be finite and >= 0 on the band");
    return v;
  };
  const double nd = static_cast<double>(n);
  std::vector<std::complex<double>> freq(n);
  freq[0] = std::sqrt(nd * s_sym(0) / dt) * stream.gaussian();
  for (std::size_t k = 1; k < n / 2; ++k) {
    const double amp = std::sqrt(nd * s_sym(k) / (2.0 * dt));
    const double re = amp * stream.gaussian();
    const double im = amp * stream.gaussian();
    freq[k] = {re, im};
    freq[n - k] = {re, -im};  // Hermitian: real output
  }
  freq[n / 2] = std::sqrt(nd * s_sym(n / 2) / dt) * stream.gaussian();

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> time(n);
  fft.inv(time, freq);
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = time[j].real();
  return out;
}

struct StepState {
  double theta = 0;
  double l = 0;
  std::complex<double> a{0, 0};
};

// Heun predictor-corrector for the additive-noise system; the same noise
// increment enters both stages. sink(j, t, state) fires at every grid point
// including j = 0.
template <typename Sink>
void run_trajectory_core(const PhysicalParams& params, const RotorModel& model,
                         const SimConfig& config, int trajectory_index, Sink&& sink) {
  if (!(config.dt > 0) || !std::isfinite(config.dt))
    throw ConfigError("dt must be positive and finite");
  if (!(config.t_end > 0) || !std::isfinite(config.t_end))
    throw ConfigError("t_end must be positive and finite");
  if (trajectory_index < 0) throw ConfigError("trajectory_index must be >= 0");
  params.validate();

  const double dt = config.dt;
  const std::size_t n_steps =
      static_cast<std::size_t>(std::ceil(config.t_end / dt - 1e-9));
  GaussianStream stream(
      stream_seed(config.seed, static_cast<std::uint64_t>(trajectory_index)));

  std::vector<double> colored;
  double white_amp = 0;
  if (params.d_theta > 0) {
    if (config.noise_mode == NoiseMode::quantum_colored) {
      colored = colored_noise_impl(
          [&](double w) {
            return noise_spectrum_epsilon(w, params.d_theta, params.temperature);
          },
          dt, next_pow2(n_steps), stream);
    } else if (config.noise_mode == NoiseMode::classical_white) {
      // flat classical limit S = 2 D k_B T / hbar
      white_amp =
          std::sqrt(2.0 * params.d_theta * thermal_frequency(params.temperature) / dt);
    }
  }

  const double inv_i = 1.0 / model.inertia;
  const double iw2 = model.inertia * model.omega_theta * model.omega_theta;
  const double damp = params.d_theta * inv_i;
  const double n_atoms = static_cast<double>(params.n_atoms);
  const double vac_amp =
      config.include_vacuum_input ? std::sqrt(0.5 * params.gamma * dt) : 0.0;

  auto drift = [&](const StepState& y, StepState& f) {
    const double photon = std::norm(y.a);
    f.theta = y.l * inv_i;
    f.l = -(iw2 + 2.0 * model.xi_theta * photon) * y.theta - damp * y.l;
    if (config.include_quartic) {
      const double beta = (params.q - params.u0 * photon) * n_atoms / 3.0;
      f.l += 4.0 * beta * y.theta * y.theta * y.theta;
    }
    f.a = std::complex<double>(0, 1) *
              (params.delta - model.xi_theta * y.theta * y.theta) * y.a -
          params.gamma * y.a + params.kappa_l;
  };

  StepState y;
  y.theta = config.theta0;
  y.l = config.l_z0;
  y.a = config.a0;
  sink(std::size_t{0}, 0.0, y);

  StepState k1, k2, pred;
  for (std::size_t j = 0; j < n_steps; ++j) {
    double eps = 0;
    if (params.d_theta > 0 && config.noise_mode == NoiseMode::quantum_colored)
      eps = colored[j];
    else if (params.d_theta > 0 && config.noise_mode == NoiseMode::classical_white)
      eps = white_amp * stream.gaussian();
    std::complex<double> dz{0, 0};
    if (config.include_vacuum_input) {
      const double zr = stream.gaussian();
      const double zi = stream.gaussian();
      dz = vac_amp * std::complex<double>(zr, zi);
    }
    const double inc_l = eps * dt;

    drift(y, k1);
    pred.theta = y.theta + k1.theta * dt;
    pred.l = y.l + k1.l * dt + inc_l;
    pred.a = y.a + k1.a * dt + dz;
    drift(pred, k2);
    y.theta += 0.5 * dt * (k1.theta + k2.theta);
    y.l += 0.5 * dt * (k1.l + k2.l) + inc_l;
    y.a += 0.5 * dt * (k1.a + k2.a) + dz;

    if (!std::isfinite(y.theta) || !std::isfinite(y.l) ||
        !std::isfinite(y.a.real()) || !std::isfinite(y.a.imag()))
      throw DivergenceError("trajectory state not finite", j + 1);
    sink(j + 1, static_cast<double>(j + 1) * dt, y);
  }
}

// Runs fn(i) for i = 0..n-1 on `jobs` threads and hands each result to
// fold(i, result) strictly in index order, whatever the completion order.
template <typename Result, typename Fn, typename Fold>
void ordered_parallel_for(int n, int jobs, Fn&& fn, Fold&& fold) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fold(i, fn(i));
    return;
  }
  std::mutex mu;
  std::map<int, Result> done;
  int next_fold = 0;
  std::atomic<int> next_index{0};
  std::exception_ptr error;
  std::atomic<bool> stop{false};

  auto worker = [&]() {
    for (;;) {
      if (stop.load()) return;
      const int i = next_index.fetch_add(1);
      if (i >= n) return;
      try {
        Result r = fn(i);
        std::lock_guard<std::mutex> lock(mu);
        done.emplace(i, std::move(r));
        for (auto it = done.begin(); it != done.end() && it->first == next_fold;) {
          fold(it->first, std::move(it->second));
          it = done.erase(it);
          ++next_fold;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        stop.store(true);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  const int n_threads = std::min(jobs, n);
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<double> hann_window(std::size_t len, PsdWindow window) {
  std::vector<double> w(len, 1.0);
  if (window == PsdWindow::hann)
    for (std::size_t j = 0; j < len; ++j)
      w[j] = 0.5 * (1.0 - std::cos(kTwoPi * static_cast<double>(j) /
                                   static_cast<double>(len)));
  return w;
}

std::vector<double> welch_values(const std::vector<double>& x, double dt,
                                 std::size_t segment_len, PsdWindow window) {
  if (!is_pow2(segment_len))
    throw std::invalid_argument("segment_len must be a power of two >= 2");
  if (x.size() < segment_len)
    throw std::invalid_argument("series shorter than one segment");
  const std::size_t hop = segment_len / 2;
  const std::size_t n_seg = 1 + (x.size() - segment_len) / hop;
  const std::vector<double> w = hann_window(segment_len, window);
  double u = 0;
  for (double v : w) u += v * v;
  u /= static_cast<double>(segment_len);

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> seg(segment_len), freq(segment_len);
  std::vector<double> acc(segment_len / 2 + 1, 0.0);
  for (std::size_t s = 0; s < n_seg; ++s) {
    const double* base = x.data() + s * hop;
    for (std::size_t j = 0; j < segment_len; ++j) seg[j] = w[j] * base[j];
    fft.fwd(freq, seg);
    for (std::size_t k = 0; k <= segment_len / 2; ++k) acc[k] += std::norm(freq[k]);
  }
  const double scale = dt / (static_cast<double>(n_seg) *
                             static_cast<double>(segment_len) * u);
  for (double& v : acc) v *= scale;
  return acc;
}

std::vector<SpectrumPoint> to_points(const std::vector<double>& values,
                                     double dt, std::size_t segment_len) {
  std::vector<SpectrumPoint> out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    out[k].omega = kTwoPi * static_cast<double>(k) /
                   (static_cast<double>(segment_len) * dt);
    out[k].s_theta = values[k];
  }
  return out;
}

std::size_t transient_steps(double transient_time, double dt) {
  if (transient_time <= 0) return 0;
  return static_cast<std::size_t>(std::ceil(transient_time / dt - 1e-9));
}

}  // namespace

std::vector<double> generate_colored_noise(const std::function<double(double)>& spectrum,
                                           double dt, std::size_t n_samples,
                                           std::uint64_t seed) {
  GaussianStream stream(seed);
  return colored_noise_impl(spectrum, dt, n_samples, stream);
}

std::vector<TrajectoryRecord> integrate_trajectory(const PhysicalParams& params,
                                                   const RotorModel& model,
                                                   const SteadyState& steady,
                                                   const SimConfig& config,
                                                   int trajectory_index) {
  (void)steady;  // fixed point enters through a0 / theta0 chosen by the caller
  std::vector<TrajectoryRecord> records;
  records.reserve(static_cast<std::size_t>(config.t_end / config.dt) + 2);
  run_trajectory_core(params, model, config, trajectory_index,
                      [&](std::size_t, double t, const StepState& y) {
                        records.push_back({t, y.theta, y.l, y.a});
                      });
  return records;
}

std::vector<SpectrumPoint> welch_psd(const std::vector<double>& x, double dt,
                                     std::size_t segment_len, PsdWindow window) {
  if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
  return to_points(welch_values(x, dt, segment_len, window), dt, segment_len);
}

std::vector<SpectrumPoint> ensemble_theta_psd(
    const std::vector<std::vector<TrajectoryRecord>>& trajectories, double dt,
    std::size_t segment_len, PsdWindow window, double transient_time) {
  if (trajectories.empty()) throw ConfigError("no trajectories to average");
  std::vector<double> acc;
  for (const auto& traj : trajectories) {
    std::vector<double> theta;
    theta.reserve(traj.size());
    for (const auto& rec : traj)
      if (rec.t >= transient_time - 0.5 * dt) theta.push_back(rec.theta);
    if (theta.size() < segment_len + segment_len / 2)
      throw ConfigError("need at least two analysis segments after the transient");
    std::vector<double> p = welch_values(theta, dt, segment_len, window);
    if (acc.empty())
      acc = std::move(p);
    else
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += p[k];
  }
  for (double& v : acc) v /= static_cast<double>(trajectories.size());
  return to_points(acc, dt, segment_len);
}

std::vector<SpectrumPoint> simulate_ensemble_psd(const PhysicalParams& params,
                                                 const RotorModel& model,
                                                 const SteadyState& steady,
                                                 const SimConfig& config,
                                                 std::size_t segment_len,
                                                 PsdWindow window,
                                                 double transient_time, int jobs) {
  (void)steady;
  if (config.n_trajectories < 1) throw ConfigError("n_trajectories must be >= 1");
  const std::size_t skip = transient_steps(transient_time, config.dt);

  auto one = [&](int i) {
    std::vector<double> theta;
    run_trajectory_core(params, model, config, i,
                        [&](std::size_t j, double, const StepState& y) {
                          if (j >= skip) theta.push_back(y.theta);
                        });
    if (theta.size() < segment_len + segment_len / 2)
      throw ConfigError("need at least two analysis segments after the transient");
    return welch_values(theta, config.dt, segment_len, window);
  };

  std::vector<double> acc(segment_len / 2 + 1, 0.0);
  ordered_parallel_for<std::vector<double>>(
      config.n_trajectories, jobs, one, [&](int, std::vector<double> p) {
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += p[k];
      });
  for (double& v : acc) v /= static_cast<double>(config.n_trajectories);
  return to_points(acc, config.dt, segment_len);
}

double ensemble_theta_variance(const PhysicalParams& params, const RotorModel& model,
                               const SteadyState& steady, const SimConfig& config,
                               double transient_time, int jobs) {
  (void)steady;
  if (config.n_trajectories < 1) throw ConfigError("n_trajectories must be >= 1");
  const std::size_t skip = transient_steps(transient_time, config.dt);

  struct SumCount {
    double sum = 0;
    std::size_t count = 0;
  };
  auto one = [&](int i) {
    SumCount sc;
    run_trajectory_core(params, model, config, i,
                        [&](std::size_t j, double, const StepState& y) {
                          if (j >= skip) {
                            sc.sum += y.theta * y.theta;
                            ++sc.count;
                          }
                        });
    return sc;
  };

  SumCount total;
  ordered_parallel_for<SumCount>(config.n_trajectories, jobs, one,
                                 [&](int, SumCount sc) {
                                   total.sum += sc.sum;
                                   total.count += sc.count;
                                 });
  if (total.count == 0) throw ConfigError("transient discards every sample");
  return total.sum / static_cast<double>(total.count);
}

}  // namespace rotorcom
