#include "rotorcom/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rotorcom/constants.hpp"

namespace rotorcom {

void PhysicalParams::validate() const {
  auto bad = [](const std::string& what) { throw std::domain_error(what); };
  if (!(c2 > 0) || !std::isfinite(c2)) bad("c2 must be positive and finite");
  if (!(q > 0) || !std::isfinite(q)) bad("q must be positive and finite");
  if (n_atoms < 2) bad("n_atoms must be >= 2");
  if (!std::isfinite(u0)) bad("u0 must be finite");
  if (!(gamma > 0) || !std::isfinite(gamma)) bad("gamma must be positive and finite");
  if (kappa_l < 0 || !std::isfinite(kappa_l)) bad("kappa_l must be >= 0 and finite");
  if (!std::isfinite(delta)) bad("delta must be finite");
  if (d_theta < 0 || !std::isfinite(d_theta)) bad("d_theta must be >= 0 and finite");
  if (temperature < 0 || !std::isfinite(temperature))
    bad("temperature must be >= 0 and finite");
}

double quadratic_zeeman(double b_field, double delta_hf) {
  if (!(delta_hf > 0)) throw std::domain_error("delta_hf must be positive");
  const double larmor = kMuBOverHbar * b_field;
  return larmor * larmor / (4.0 * delta_hf);
}

double thermal_frequency(double temperature) {
  if (temperature < 0) throw std::domain_error("temperature must be >= 0");
  return kKBOverHbar * temperature;
}

RegimeReport validate_regime(const PhysicalParams& params, double margin) {
  params.validate();
  if (!(margin >= 1)) throw std::domain_error("margin must be >= 1");
  RegimeReport rep;
  rep.ratio_c2_q = params.c2 / params.q;
  rep.bound_2n2 = 2.0 * static_cast<double>(params.n_atoms) *
                  static_cast<double>(params.n_atoms);
  rep.margin = margin;
  rep.lower_ok = rep.ratio_c2_q >= margin;
  rep.upper_ok = rep.ratio_c2_q <= rep.bound_2n2 / margin;
  return rep;
}

}  // namespace rotorcom
