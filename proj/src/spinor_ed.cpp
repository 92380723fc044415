#include "rotorcom/spinor_ed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace rotorcom {

namespace {

constexpr int kMaxAtoms = 60;

// Diagonal of F^2 in |n+, n0, n->:  (n+ - n-)^2 + (n+ + n-)(2 n0 + 1) + 2 n0.
double f2_diag(double np, double n0, double nm) {
  const double m = np - nm;
  return m * m + (np + nm) * (2.0 * n0 + 1.0) + 2.0 * n0;
}

// F^2 matrix element for (n+, n0, n-) -> (n+ + 1, n0 - 2, n- + 1): the pair
// scattering channel 2 m0 <-> m+ + m-.
double f2_offdiag(double np, double n0, double nm) {
  return 2.0 * std::sqrt((np + 1.0) * (nm + 1.0) * n0 * (n0 - 1.0));
}

}  // namespace

std::size_t spinor_basis_dimension(int n_atoms) {
  if (n_atoms < 2) throw std::invalid_argument("n_atoms must be >= 2");
  const std::size_t n = static_cast<std::size_t>(n_atoms);
  return (n + 1) * (n + 2) / 2;
}

SpinorSpectrum exact_spinor_spectrum(int n_atoms, double c2, double q, int k) {
  if (n_atoms < 2) throw std::invalid_argument("n_atoms must be >= 2");
  if (n_atoms > kMaxAtoms)
    throw std::length_error("exact diagonalization limited to n_atoms <= 60");
  if (!(c2 > 0)) throw std::domain_error("c2 must be positive");
  if (q < 0) throw std::domain_error("q must be >= 0");
  const std::size_t dim = spinor_basis_dimension(n_atoms);
  if (k < 1 || static_cast<std::size_t>(k) > dim)
    throw std::invalid_argument("k must be in [1, basis dimension]");

  const double n = static_cast<double>(n_atoms);
  std::vector<double> merged;
  merged.reserve(dim);
  double ground = 0;
  int ground_m = 0;
  bool have_ground = false;
  Eigen::VectorXd ground_vec;
  std::vector<double> ground_n0_col;

  // F_z = n+ - n- is conserved; within sector m the basis is p = n- and the
  // Hamiltonian is tridiagonal (the only F^2 channel changes p by 1).
  for (int m = 0; m <= n_atoms; ++m) {
    const int pmax = (n_atoms - m) / 2;
    const int sdim = pmax + 1;
    Eigen::VectorXd diag(sdim), sub(std::max(sdim - 1, 1));
    std::vector<double> n0_col(sdim);
    for (int p = 0; p <= pmax; ++p) {
      const double nm = p;
      const double np = p + m;
      const double n0 = n - np - nm;
      n0_col[p] = n0;
      diag[p] = c2 / (2.0 * n) * f2_diag(np, n0, nm) - q * n0;
      if (p < pmax) sub[p] = c2 / (2.0 * n) * f2_offdiag(np, n0, nm);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(std::max(sdim - 1, 0)),
                                  m == 0 ? Eigen::ComputeEigenvectors
                                         : Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    for (int i = 0; i < sdim; ++i) {
      merged.push_back(ev[i]);
      if (m > 0) merged.push_back(ev[i]);  // the -m sector is an exact copy
    }
    if (!have_ground || ev[0] < ground) {
      ground = ev[0];
      ground_m = m;
      have_ground = true;
    }
    if (m == 0) {
      ground_vec = solver.eigenvectors().col(0);
      ground_n0_col = n0_col;
    }
  }

  std::sort(merged.begin(), merged.end());
  SpinorSpectrum out;
  out.n_atoms = n_atoms;
  out.basis_dimension = dim;
  out.ground_energy = merged.front();
  out.ground_fz = ground_m;
  out.energies.assign(merged.begin(), merged.begin() + k);
  for (double& e : out.energies) e -= out.ground_energy;

  // <n0> in the m = 0 ground state (the global ground state for c2 > 0, q >= 0)
  double n0_mean = 0;
  for (int p = 0; p < ground_vec.size(); ++p)
    n0_mean += ground_vec[p] * ground_vec[p] * ground_n0_col[p];
  out.ground_n0 = n0_mean;
  return out;
}

Eigen::SparseMatrix<double> spinor_f2_matrix(int n_atoms) {
  if (n_atoms < 2) throw std::invalid_argument("n_atoms must be >= 2");
  if (n_atoms > kMaxAtoms)
    throw std::length_error("exact diagonalization limited to n_atoms <= 60");
  const int dim = static_cast<int>(spinor_basis_dimension(n_atoms));
  auto index = [n_atoms](int np, int n0) {
    // lexicographic in (n+, n0): states with n+' < np first
    int base = 0;
    for (int a = 0; a < np; ++a) base += n_atoms - a + 1;
    return base + n0;
  };
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(dim) * 3);
  for (int np = 0; np <= n_atoms; ++np) {
    for (int n0 = 0; n0 <= n_atoms - np; ++n0) {
      const int nm = n_atoms - np - n0;
      const int row = index(np, n0);
      trips.emplace_back(row, row, f2_diag(np, n0, nm));
      if (n0 >= 2) {
        const double v = f2_offdiag(np, n0, nm);
        const int col = index(np + 1, n0 - 2);
        trips.emplace_back(row, col, v);
        trips.emplace_back(col, row, v);
      }
    }
  }
  Eigen::SparseMatrix<double> f2(dim, dim);
  f2.setFromTriplets(trips.begin(), trips.end());
  return f2;
}

Eigen::SparseMatrix<double> spinor_hamiltonian(int n_atoms, double c2, double q) {
  if (!(c2 > 0)) throw std::domain_error("c2 must be positive");
  if (q < 0) throw std::domain_error("q must be >= 0");
  Eigen::SparseMatrix<double> h = spinor_f2_matrix(n_atoms);
  h *= c2 / (2.0 * static_cast<double>(n_atoms));
  auto index = [n_atoms](int np, int n0) {
    int base = 0;
    for (int a = 0; a < np; ++a) base += n_atoms - a + 1;
    return base + n0;
  };
  for (int np = 0; np <= n_atoms; ++np)
    for (int n0 = 0; n0 <= n_atoms - np; ++n0)
      h.coeffRef(index(np, n0), index(np, n0)) -= q * n0;
  h.makeCompressed();
  return h;
}

}  // namespace rotorcom
