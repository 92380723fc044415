#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rotorcom/params.hpp"

namespace rotorcom {

/// key = value overrides, applied after the file (they win).
using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Accepted keys (frequencies in Hz, converted to rad/s exactly once here):
///   c2_hz, n_atoms, u0_hz, gamma_hz, kappa_l_hz, temperature_k, d_theta,
///   q_hz  XOR  (b_field_gauss + delta_hf_hz),
///   delta_hz XOR delta_over_gamma.
/// Lines are "key = value"; '#' starts a comment; blank lines ignored.
/// Unknown or duplicate keys raise ConfigError, as do missing required keys.
/// d_theta defaults to 0.01 * omega_theta * I when absent.
PhysicalParams parse_config_text(const std::string& text,
                                 const KeyValues& overrides = {});

PhysicalParams load_config_file(const std::string& path,
                                const KeyValues& overrides = {});

}  // namespace rotorcom
