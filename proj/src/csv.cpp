#include "rotorcom/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rotorcom/constants.hpp"
#include "rotorcom/errors.hpp"

namespace rotorcom {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string param_header(const PhysicalParams& p) {
  std::ostringstream out;
  out << "# c2_hz = " << fmt17(p.c2 / kTwoPi) << "\n"
      << "# q_hz = " << fmt17(p.q / kTwoPi) << "\n"
      << "# n_atoms = " << p.n_atoms << "\n"
      << "# u0_hz = " << fmt17(p.u0 / kTwoPi) << "\n"
      << "# gamma_hz = " << fmt17(p.gamma / kTwoPi) << "\n"
      << "# kappa_l_hz = " << fmt17(p.kappa_l / kTwoPi) << "\n"
      << "# delta_hz = " << fmt17(p.delta / kTwoPi) << "\n"
      << "# d_theta = " << fmt17(p.d_theta) << "\n"
      << "# temperature_k = " << fmt17(p.temperature) << "\n";
  return out.str();
}

std::string steady_csv(const PhysicalParams& p, const SteadyState& s) {
  std::ostringstream out;
  out << param_header(p)
      << "re_a_s,im_a_s,photon_number,eta,omega_eff_rad_s,theta_s,l_z_s\n"
      << fmt17(s.a_s.real()) << ',' << fmt17(s.a_s.imag()) << ','
      << fmt17(s.photon_number) << ',' << fmt17(s.eta) << ','
      << fmt17(s.omega_eff) << ',' << fmt17(s.theta_s) << ',' << fmt17(s.l_z_s)
      << '\n';
  return out.str();
}

std::string spectrum_csv(const PhysicalParams& p,
                         const std::vector<SpectrumPoint>& pts) {
  std::ostringstream out;
  out << param_header(p) << "omega_rad_s,re_chi,im_chi,s_theta,s_x1,s_x2\n";
  for (const auto& pt : pts)
    out << fmt17(pt.omega) << ',' << fmt17(pt.chi.real()) << ','
        << fmt17(pt.chi.imag()) << ',' << fmt17(pt.s_theta) << ','
        << fmt17(pt.s_x1) << ',' << fmt17(pt.s_x2) << '\n';
  return out.str();
}

std::string moments_csv(const PhysicalParams& p,
                        const std::vector<MomentState>& history) {
  std::ostringstream out;
  out << param_header(p) << "t_s,theta2,l2,sym\n";
  for (const auto& m : history)
    out << fmt17(m.t) << ',' << fmt17(m.theta2) << ',' << fmt17(m.l2) << ','
        << fmt17(m.sym) << '\n';
  return out.str();
}

std::string trajectory_csv(const PhysicalParams& p,
                           const std::vector<TrajectoryRecord>& records) {
  std::ostringstream out;
  out << param_header(p) << "t_s,theta,l_z,re_a,im_a\n";
  for (const auto& r : records)
    out << fmt17(r.t) << ',' << fmt17(r.theta) << ',' << fmt17(r.l_z) << ','
        << fmt17(r.a.real()) << ',' << fmt17(r.a.imag()) << '\n';
  return out.str();
}

std::string psd_csv(const PhysicalParams& p, const std::vector<double>& omega,
                    const std::vector<double>& psd) {
  if (omega.size() != psd.size())
    throw ConfigError("psd_csv: omega and psd lengths differ");
  std::ostringstream out;
  out << param_header(p) << "omega_rad_s,psd\n";
  for (std::size_t k = 0; k < omega.size(); ++k)
    out << fmt17(omega[k]) << ',' << fmt17(psd[k]) << '\n';
  return out.str();
}

std::string sweep_csv(const PhysicalParams& p, const SweepSpec& spec,
                      const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << param_header(p) << "# sweep_axis = " << axis_name(spec.axis) << "\n"
      << "# margin = " << fmt17(spec.margin) << "\n"
      << axis_name(spec.axis)
      << ",temperature_k,eta,omega_eff_rad_s,n_thermal,nbar,stable,regime_ok\n";
  for (const auto& r : rows)
    out << fmt17(r.axis_value) << ',' << fmt17(r.temperature_k) << ','
        << fmt17(r.eta) << ',' << fmt17(r.omega_eff) << ',' << fmt17(r.n_thermal)
        << ',' << fmt17(r.nbar) << ',' << (r.stable ? 1 : 0) << ','
        << (r.regime_ok ? 1 : 0) << '\n';
  return out.str();
}

std::string exactdiag_csv(int n_atoms, double c2, double q,
                          const SpinorSpectrum& spec) {
  std::ostringstream out;
  out << "# n_atoms = " << n_atoms << "\n"
      << "# c2_hz = " << fmt17(c2 / kTwoPi) << "\n"
      << "# q_hz = " << fmt17(q / kTwoPi) << "\n"
      << "# basis_dimension = " << spec.basis_dimension << "\n"
      << "# ground_energy_rad_s = " << fmt17(spec.ground_energy) << "\n"
      << "# ground_n0 = " << fmt17(spec.ground_n0) << "\n"
      << "# ground_fz = " << spec.ground_fz << "\n"
      << "k,energy_rad_s\n";
  for (std::size_t k = 0; k < spec.energies.size(); ++k)
    out << k << ',' << fmt17(spec.energies[k]) << '\n';
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << content;
  if (!out) throw ConfigError("failed writing output file: " + path);
}

}  // namespace rotorcom
