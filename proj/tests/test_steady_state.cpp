#include "doctest.h"

#include <cmath>
#include <complex>

#include "rotorcom/errors.hpp"
#include "rotorcom/rotor.hpp"
#include "rotorcom/steady_state.hpp"
#include "test_helpers.hpp"

using namespace rotorcom;

TEST_SUITE("steady_state") {

TEST_CASE("reference point: field, photon number, enhancement") {
  const PhysicalParams p = testing::reference_params();
  const RotorModel m = build_rotor(p);
  const SteadyState s = solve_steady(p, m);
  // resonant drive: a_s = kappa_L / gamma is real
  CHECK(s.a_s.real() == doctest::Approx(60.0).epsilon(1e-14));
  CHECK(s.a_s.imag() == 0.0);
  CHECK(s.photon_number == doctest::Approx(3600.0).epsilon(1e-14));
  CHECK(s.eta == doctest::Approx(4242.6408049704141).epsilon(1e-12));
  CHECK(s.omega_eff == doctest::Approx(23855.109760159205).epsilon(1e-12));
  CHECK(s.theta_s == 0.0);
  CHECK(s.l_z_s == 0.0);
}

TEST_CASE("compact point is tuned to eta = 2") {
  const PhysicalParams p = testing::compact_params();
  CHECK(enhancement_factor(p) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("undriven cavity leaves the trap bare") {
  PhysicalParams p = testing::reference_params();
  p.kappa_l = 0.0;
  const RotorModel m = build_rotor(p);
  const SteadyState s = solve_steady(p, m);
  CHECK(s.photon_number == 0.0);
  CHECK(s.eta == 1.0);
  CHECK(s.omega_eff == m.omega_theta);
}

TEST_CASE("detuning reduces the circulating power") {
  PhysicalParams p = testing::reference_params();
  p.delta = p.gamma;
  const SteadyState s = cavity_steady_field(p);
  CHECK(s.photon_number == doctest::Approx(1800.0).epsilon(1e-13));
  const double denom = p.gamma * p.gamma + p.delta * p.delta;
  CHECK(s.a_s.real() == doctest::Approx(p.kappa_l * p.gamma / denom).epsilon(1e-14));
  CHECK(s.a_s.imag() == doctest::Approx(p.kappa_l * p.delta / denom).epsilon(1e-14));
  // photon number falls monotonically with |Delta|
  double prev = 3600.0;
  for (double d : {0.5, 1.0, 2.0, 5.0}) {
    p.delta = d * p.gamma;
    const double ph = cavity_steady_field(p).photon_number;
    CHECK(ph < prev);
    prev = ph;
    p.delta = -d * p.gamma;
    CHECK(cavity_steady_field(p).photon_number == doctest::Approx(ph).epsilon(1e-14));
  }
}

TEST_CASE("enhancement identity eta^2 - 1 = 2 xi |a_s|^2 / (I omega_theta^2)") {
  GaussianStream rng(173);
  for (int i = 0; i < 200; ++i) {
    const PhysicalParams p = testing::random_stable_params(rng);
    const RotorModel m = build_rotor(p);
    const SteadyState s = solve_steady(p, m);
    const double lhs = s.eta * s.eta - 1.0;
    const double rhs = 2.0 * m.xi_theta * s.photon_number /
                       (m.inertia * m.omega_theta * m.omega_theta);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    CHECK(s.omega_eff == doctest::Approx(s.eta * m.omega_theta).epsilon(1e-14));
    CHECK(s.eta >= 1.0);
  }
}

TEST_CASE("negative light shift can soften or invert the trap") {
  PhysicalParams p = testing::compact_params();
  p.u0 = -p.u0;
  // weak drive: eta < 1 but still trapping
  p.kappa_l = kTwoPi * 500.0;
  const double eta = enhancement_factor(p);
  CHECK(eta < 1.0);
  CHECK(eta > 0.0);
  // strong drive: radicand goes negative, the fixed point is anti-trapped
  p.kappa_l = kTwoPi * 2000.0;
  CHECK_THROWS_AS(enhancement_factor(p), AntiTrappingError);
  CHECK_THROWS_AS(solve_steady(p, build_rotor(p)), AntiTrappingError);
  // the bare field solve still works
  CHECK(cavity_steady_field(p).photon_number > 0.0);
}

TEST_CASE("cavity_steady_field leaves the enhancement unset") {
  const PhysicalParams p = testing::reference_params();
  const SteadyState s = cavity_steady_field(p);
  CHECK(std::isnan(s.eta));
  CHECK(std::isnan(s.omega_eff));
  CHECK(s.photon_number == doctest::Approx(3600.0).epsilon(1e-14));
}

}  // TEST_SUITE
