#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotorcom {

// Bad config file / CLI usage. CLI exit code 1.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// U0 < 0 with enough drive that the effective torsional stiffness goes negative
// (radicand of the enhancement factor < 0). CLI exit code 2.
struct AntiTrappingError : std::runtime_error {
  explicit AntiTrappingError(const std::string& msg) : std::runtime_error(msg) {}
};

// Linearized dynamics fail the Routh-Hurwitz test. CLI exit code 2.
struct StabilityError : std::runtime_error {
  explicit StabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite state during stochastic integration. CLI exit code 3.
struct DivergenceError : std::runtime_error {
  DivergenceError(const std::string& msg, std::size_t at_step)
      : std::runtime_error(msg + " at step " + std::to_string(at_step)), step(at_step) {}
  std::size_t step;
};

}  // namespace rotorcom
