#include "rotorcom/steady_state.hpp"

#include <cmath>
#include <limits>

#include "rotorcom/errors.hpp"

namespace rotorcom {

SteadyState cavity_steady_field(const PhysicalParams& params) {
  params.validate();
  SteadyState s;
  s.a_s = params.kappa_l / std::complex<double>(params.gamma, -params.delta);
  s.photon_number = std::norm(s.a_s);
  s.eta = std::numeric_limits<double>::quiet_NaN();
  s.omega_eff = std::numeric_limits<double>::quiet_NaN();
  return s;
}

double enhancement_factor(const PhysicalParams& params) {
  params.validate();
  const double lorentz = params.kappa_l * params.kappa_l /
                         (params.delta * params.delta + params.gamma * params.gamma);
  const double radicand = 1.0 + params.u0 / params.q * lorentz;
  if (radicand < 0)
    throw AntiTrappingError(
        "cavity field overwhelms the Zeeman stiffness (eta^2 = " +
        std::to_string(radicand) + " < 0)");
  return std::sqrt(radicand);
}

double effective_frequency(const PhysicalParams& params, const RotorModel& model) {
  return enhancement_factor(params) * model.omega_theta;
}

SteadyState solve_steady(const PhysicalParams& params, const RotorModel& model) {
  SteadyState s = cavity_steady_field(params);
  s.eta = enhancement_factor(params);
  s.omega_eff = s.eta * model.omega_theta;
  return s;
}

}  // namespace rotorcom
