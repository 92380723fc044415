#pragma once

#include <string>
#include <vector>

#include "rotorcom/sweep.hpp"

namespace rotorcom {

/// Self-contained SVG: roton occupation vs the sweep axis, log-scaled y,
/// one polyline per temperature. Deterministic output (no timestamps,
/// fixed palette). Throws ConfigError when fewer than two rows are
/// plottable on either axis.
std::string sweep_plot_svg(const SweepSpec& spec,
                           const std::vector<SweepRow>& rows);

}  // namespace rotorcom
