#pragma once

#include <string>
#include <vector>

#include "rotorcom/langevin.hpp"
#include "rotorcom/linear_dynamics.hpp"
#include "rotorcom/moments.hpp"
#include "rotorcom/params.hpp"
#include "rotorcom/spinor_ed.hpp"
#include "rotorcom/steady_state.hpp"
#include "rotorcom/sweep.hpp"

namespace rotorcom {

/// Shortest round-trip decimal representation of a double ("%.17g" trimmed
/// by the runtime). NaN prints as "nan".
std::string fmt17(double x);

/// '#'-prefixed header lines echoing the resolved parameter set. Every CSV
/// writer below starts with this so outputs are self-describing.
std::string param_header(const PhysicalParams& p);

std::string steady_csv(const PhysicalParams& p, const SteadyState& s);

std::string spectrum_csv(const PhysicalParams& p,
                         const std::vector<SpectrumPoint>& pts);

std::string moments_csv(const PhysicalParams& p,
                        const std::vector<MomentState>& history);

std::string trajectory_csv(const PhysicalParams& p,
                           const std::vector<TrajectoryRecord>& records);

/// omega_rad_s, psd columns; grid is the one-sided Welch grid.
std::string psd_csv(const PhysicalParams& p,
                    const std::vector<double>& omega,
                    const std::vector<double>& psd);

std::string sweep_csv(const PhysicalParams& p,
                      const SweepSpec& spec,
                      const std::vector<SweepRow>& rows);

std::string exactdiag_csv(int n_atoms, double c2, double q,
                          const SpinorSpectrum& spec);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace rotorcom
