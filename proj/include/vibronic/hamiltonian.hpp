#pragma once

#include <Eigen/Dense>

#include "vibronic/basis.hpp"
#include "vibronic/coupling.hpp"

namespace vibronic {

// Dense Hermitian Hamiltonian on the truncated product basis.
// Diagonal: E_n + delta/2 (|g,n>), E_n - delta/2 (|e,n>).
// Off-diagonal: (omega_r/2) <n|e^{i k x}|n'> connecting |e,n><g,n'| plus conjugates.
struct HamiltonianMatrix {
  TrapModel trap;
  DriveParams drive;
  BasisMap basis;
  Eigen::MatrixXcd mat;

  int dim() const { return basis.dim(); }
};

HamiltonianMatrix build_full_hamiltonian(TrapModel trap, const DriveParams& drive, int n_trunc);
// Variant reusing a precomputed coupling table (same trap and eta, count >= n_trunc).
HamiltonianMatrix build_full_hamiltonian(TrapModel trap, const DriveParams& drive, int n_trunc,
                                         const CouplingMatrix& coupling);

// Laser off: diagonal in the bare basis with eps_{g,n} = E_n + delta/2,
// eps_{e,n} = E_n - delta/2.
HamiltonianMatrix build_bare_hamiltonian(TrapModel trap, double delta, int n_trunc);

// eta = 0: internal mixing only, block diagonal in n.
HamiltonianMatrix build_semidressed_hamiltonian(TrapModel trap, const DriveParams& drive,
                                                int n_trunc);

// Analytic eigenpair of one 2x2 semidressed block:
//   energy = E_n + s*Omega/2,
//   state  = ((delta + s*Omega)/omega_r, 1) / sqrt(N_s)  over (|g,n>, |e,n>),
//   N_s    = 2 Omega (Omega + s delta) / omega_r^2.
// The omega_r -> 0 limit is taken by continuity (sign of delta selects the bare state).
struct SemidressedLevel {
  int n = 0;
  int sign = +1;  // s = +-1
  double energy = 0.0;
  Eigen::Vector2cd state;  // amplitudes over (|g,n>, |e,n>)
};

struct SemidressedPair {
  SemidressedLevel plus;
  SemidressedLevel minus;
  bool degenerate = false;  // omega_r = 0 and delta = 0
};

SemidressedPair semidressed_spectrum(TrapModel trap, const DriveParams& drive, int n);

// Embed a semidressed level into the truncated product basis.
Eigen::VectorXcd embed_semidressed(const SemidressedLevel& level, const BasisMap& basis);

// <eps_{n,s}| W(eta) |eps_{n',s'}> with W = H(eta) - H(0), via the closed
// normalization/C/S expression.  Requires omega_r > 0.
Complex w_matrix_element(TrapModel trap, const DriveParams& drive, int s, int n, int s_prime,
                         int n_prime);

}  // namespace vibronic
