#pragma once

#include <cstdint>

namespace rotorcom {

/// Physical parameter set of the driven cavity + spin-1 condensate system.
/// All rates are angular frequencies (rad/s); see constants.hpp for conventions.
struct PhysicalParams {
  double c2 = 0;           // spin-dependent interaction, > 0 (antiferromagnetic)
  double q = 0;            // quadratic Zeeman shift, > 0
  std::int64_t n_atoms = 0;  // N >= 2
  double u0 = 0;           // dispersive cavity shift per atom (sign free)
  double gamma = 0;        // cavity amplitude decay rate, > 0
  double kappa_l = 0;      // coherent drive amplitude, >= 0
  double delta = 0;        // drive-cavity detuning (sign free)
  double d_theta = 0;      // rotor friction coefficient (dimensionless), >= 0;
                           // the physical damping rate is d_theta / I
  double temperature = 0;  // reservoir temperature, K, >= 0

  /// Throws std::domain_error on any violated bound.
  void validate() const;
};

/// Result of the rotor-regime check  margin <= c2/q <= 2 N^2 / margin.
struct RegimeReport {
  double ratio_c2_q = 0;
  double bound_2n2 = 0;
  double margin = 0;
  bool lower_ok = false;  // c2/q >= margin
  bool upper_ok = false;  // c2/q <= 2 N^2 / margin
  bool ok() const { return lower_ok && upper_ok; }
};

/// q = (mu_B B / hbar)^2 / (4 delta_hf).  b_field in tesla, delta_hf in rad/s (> 0).
double quadratic_zeeman(double b_field, double delta_hf);

/// k_B T / hbar in rad/s. temperature >= 0.
double thermal_frequency(double temperature);

/// Checks 1 << c2/q << 2N^2 with the given "much less than" margin (default 10).
RegimeReport validate_regime(const PhysicalParams& params, double margin = 10.0);

}  // namespace rotorcom
