#pragma once

// Unit conventions used throughout:
//  - every frequency-like quantity is an angular frequency in rad/s
//    (config files take Hz and are multiplied by 2*pi exactly once, at parse time)
//  - temperatures are kelvin, magnetic fields tesla
//  - hbar = 1: energies are rad/s, the rotor inertia I = N/c2 carries seconds

namespace rotorcom {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Bohr magneton over hbar: 2*pi * 1.399624 MHz/gauss = 2*pi * 1.399624e10 rad/(s T)
inline constexpr double kMuBOverHbar = kTwoPi * 1.399624e10;

// Boltzmann constant over hbar, rad/(s K)
inline constexpr double kKBOverHbar = 1.30920e11;

}  // namespace rotorcom
