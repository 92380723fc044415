#include "rotorcom/sweep.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rotorcom/constants.hpp"
#include "rotorcom/errors.hpp"
#include "rotorcom/linear_dynamics.hpp"
#include "rotorcom/moments.hpp"
#include "rotorcom/rotor.hpp"
#include "rotorcom/steady_state.hpp"

namespace rotorcom {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

PhysicalParams apply_axis(const PhysicalParams& base, SweepAxis axis, double value,
                          double temperature) {
  PhysicalParams p = base;
  switch (axis) {
    case SweepAxis::delta_over_gamma:
      p.delta = value * p.gamma;
      break;
    case SweepAxis::q_over_c2:
      p.q = value * p.c2;
      break;
    case SweepAxis::kappa_l_hz:
      p.kappa_l = kTwoPi * value;
      break;
    case SweepAxis::temperature_k:
      break;  // temperature set below
  }
  p.temperature = temperature;
  return p;
}

SweepRow compute_row(const PhysicalParams& base, SweepAxis axis, double value,
                     double temperature, double margin) {
  SweepRow row;
  row.axis_value = value;
  row.temperature_k = temperature;
  row.eta = kNaN;
  row.omega_eff = kNaN;
  row.n_thermal = kNaN;
  row.nbar = kNaN;
  row.stable = false;
  row.regime_ok = false;

  const PhysicalParams p = apply_axis(base, axis, value, temperature);
  try {
    row.regime_ok = validate_regime(p, margin).ok();
    const RotorModel model = build_rotor(p);
    row.n_thermal = thermal_occupation(model.omega_theta, p.temperature);
    const SteadyState steady = solve_steady(p, model);  // throws on anti-trapping
    row.eta = steady.eta;
    row.omega_eff = steady.omega_eff;
    row.stable = stable_routh_hurwitz(build_drift(p, model, steady));
    if (row.stable) {
      const MomentState fixed = steady_moments(p, model, steady);
      row.nbar = rotor_energy(fixed, model) / steady.omega_eff;
    }
  } catch (const AntiTrappingError&) {
    // softened away: stiffness < 0, no stationary occupation to report
  } catch (const std::domain_error&) {
    // axis pushed a parameter out of its physical domain (q <= 0, ...)
  }
  return row;
}

}  // namespace

const char* axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::delta_over_gamma: return "delta_over_gamma";
    case SweepAxis::q_over_c2: return "q_over_c2";
    case SweepAxis::kappa_l_hz: return "kappa_l_hz";
    case SweepAxis::temperature_k: return "temperature_k";
  }
  throw std::logic_error("unreachable");
}

SweepAxis axis_from_name(const std::string& name) {
  if (name == "delta_over_gamma") return SweepAxis::delta_over_gamma;
  if (name == "q_over_c2") return SweepAxis::q_over_c2;
  if (name == "kappa_l_hz") return SweepAxis::kappa_l_hz;
  if (name == "temperature_k") return SweepAxis::temperature_k;
  throw ConfigError("unknown sweep axis: " + name);
}

std::vector<SweepRow> run_sweep(const PhysicalParams& base, const SweepSpec& spec) {
  if (spec.points < 1) throw ConfigError("sweep needs at least one point");
  if (!(std::isfinite(spec.start) && std::isfinite(spec.stop)))
    throw ConfigError("sweep bounds must be finite");
  if (!(spec.margin >= 1)) throw ConfigError("regime margin must be >= 1");

  std::vector<double> values(static_cast<std::size_t>(spec.points));
  for (int i = 0; i < spec.points; ++i)
    values[static_cast<std::size_t>(i)] =
        spec.points == 1 ? spec.start
                         : spec.start + (spec.stop - spec.start) * i / (spec.points - 1);

  std::vector<double> temps = spec.temperatures;
  if (spec.axis == SweepAxis::temperature_k)
    temps = {kNaN};  // placeholder, the axis value is the temperature
  else if (temps.empty())
    temps = {base.temperature};

  const std::size_t n_rows = values.size() * temps.size();
  std::vector<SweepRow> rows(n_rows);
  auto fill = [&](std::size_t flat) {
    const std::size_t pi = flat / temps.size();
    const std::size_t ti = flat % temps.size();
    const double value = values[pi];
    const double temperature =
        spec.axis == SweepAxis::temperature_k ? value : temps[ti];
    rows[flat] = compute_row(base, spec.axis, value, temperature, spec.margin);
  };

  if (spec.jobs <= 1 || n_rows <= 1) {
    for (std::size_t i = 0; i < n_rows; ++i) fill(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n_rows) return;
        fill(i);
      }
    };
    std::vector<std::thread> pool;
    const std::size_t n_threads =
        std::min<std::size_t>(static_cast<std::size_t>(spec.jobs), n_rows);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

}  // namespace rotorcom
