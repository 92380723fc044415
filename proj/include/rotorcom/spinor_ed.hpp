#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/SparseCore>

namespace rotorcom {

/// Exact spectrum of H = (c2 / 2N) F^2 - q n0 in the full symmetric Fock space
/// { |n+, n0, n-> : n+ + n0 + n- = N }.  Validates the rotor reduction.
struct SpinorSpectrum {
  int n_atoms = 0;
  std::size_t basis_dimension = 0;    // (N+1)(N+2)/2
  std::vector<double> energies;       // k lowest, shifted so energies[0] == 0
  double ground_energy = 0;           // unshifted E0
  double ground_n0 = 0;               // <n0> in the ground state
  int ground_fz = 0;                  // magnetization sector of the ground state
};

/// n_atoms <= 60 (std::length_error above); 1 <= k <= basis dimension
/// (std::invalid_argument otherwise); c2 > 0, q >= 0 (std::domain_error).
///
/// H commutes with F_z = n+ - n-, and within each F_z sector (parametrized by
/// p = n-) the only off-diagonal F^2 element is (n+,n0,n-) -> (n+ +1, n0-2, n- +1),
/// so each sector is a real symmetric tridiagonal matrix of dimension <= N/2 + 1.
/// Sectors are solved densely and merged; +-m sectors are exactly degenerate.
SpinorSpectrum exact_spinor_spectrum(int n_atoms, double c2, double q, int k);

std::size_t spinor_basis_dimension(int n_atoms);

/// Full sparse F^2 over the symmetric basis, lexicographic in (n+, n0).
/// Kept as an independent cross-check of the sector solve.
Eigen::SparseMatrix<double> spinor_f2_matrix(int n_atoms);

/// Full sparse H = (c2/2N) F^2 - q n0, same ordering.
Eigen::SparseMatrix<double> spinor_hamiltonian(int n_atoms, double c2, double q);

}  // namespace rotorcom
