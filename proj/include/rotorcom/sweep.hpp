#pragma once

#include <string>
#include <vector>

#include "rotorcom/params.hpp"

namespace rotorcom {

enum class SweepAxis { delta_over_gamma, q_over_c2, kappa_l_hz, temperature_k };

struct SweepSpec {
  SweepAxis axis = SweepAxis::delta_over_gamma;
  double start = -10;
  double stop = 10;
  int points = 401;
  std::vector<double> temperatures;  // empty -> params.temperature; ignored for
                                     // the temperature_k axis
  double margin = 10.0;              // regime-check margin
  int jobs = 1;
};

/// One sweep point at one temperature.  Anti-trapping or unstable points are
/// emitted with stable = false and NaN in the columns that are undefined there,
/// never dropped.
struct SweepRow {
  double axis_value = 0;
  double temperature_k = 0;
  double eta = 0;
  double omega_eff = 0;   // rad/s
  double n_thermal = 0;   // Bose occupation at the bare omega_theta
  double nbar = 0;        // steady_moments -> rotor_energy -> E_Q / omega_eff
  bool stable = false;
  bool regime_ok = false;
};

const char* axis_name(SweepAxis axis);
SweepAxis axis_from_name(const std::string& name);  // ConfigError on unknown name

/// Rows ordered point-major, then temperature, independent of spec.jobs.
std::vector<SweepRow> run_sweep(const PhysicalParams& base, const SweepSpec& spec);

}  // namespace rotorcom
