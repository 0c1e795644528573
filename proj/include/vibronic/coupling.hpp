#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "vibronic/basis.hpp"

namespace vibronic {

using Complex = std::complex<double>;

// Generalized Laguerre function L_n^alpha(x), upward three-term recurrence in n.
double laguerre_assoc(int n, int alpha, double x);

// Effective Rabi coupling between motional levels, divided by Omega_R.
//
// Harmonic: <n| exp(i eta (a + a^dag)) |n'>
//         = e^{-eta^2/2} (i eta)^{|n-n'|} sqrt(n_<! / n_>!) L_{n_<}^{|n-n'|}(eta^2).
// Hard wall: <phi_n| exp(i k_L x) |phi_n'> with eta = k_L a / pi; closed form
//   chi/Omega_R = s_{nn'} * i^{|n-n'|} * eta * 8 n n' / (pi * Dt) * trig(eta pi / 2),
//   trig = sin for even |n-n'| (s_{nn'} = -1) and cos for odd (s_{nn'} = (-1)^{n_>}),
//   Dt = (eta^2 - (n-n')^2)(eta^2 - (n+n')^2).  The zeros of Dt at integer eta are
//   removable and handled exactly by a trig-shift reduction.
//
// Entries are real for even |n-n'| and purely imaginary for odd (motional parity).
Complex harmonic_coupling_exact(int n, int n_prime, double eta);
Complex hardwall_coupling_exact(int n, int n_prime, double eta);

// Leading eta-order of the above.  The hard-wall carrier (n == n') has no printed
// leading form (the formula divides by (n-n')^2); use hardwall_coupling_exact,
// whose eta -> 0 limit is 1.  Throws DomainError there.
Complex harmonic_coupling_leading(int n, int n_prime, double eta);
Complex hardwall_coupling_leading(int n, int n_prime, double eta);

Complex coupling_exact(TrapModel trap, int n, int n_prime, double eta);
Complex coupling_leading(TrapModel trap, int n, int n_prime, double eta);

// (C_nn', S_nn') = (<n|cos|n'>, <n|sin|n'>) of the plane-wave factor: the real and
// imaginary parts of the exact coupling.  Exactly one is nonzero by parity.
std::pair<double, double> cos_sin_elements(TrapModel trap, int n, int n_prime, double eta);

// Adaptive Gauss-Kronrod quadrature of the defining overlap integral
//   int phi_n(x) phi_n'(x) e^{i k_L x} dx
// to absolute accuracy abs_tol.  Independent of the closed forms; test oracle.
// Throws NumericalError if the error estimate exceeds abs_tol.
Complex coupling_quadrature_oracle(TrapModel trap, int n, int n_prime, double eta,
                                   double abs_tol = 1e-12);

// Dense table of coupling_exact over n, n' = n_min .. n_min + count - 1.
// Symmetric; immutable once built.
struct CouplingMatrix {
  TrapModel trap;
  double eta = 0.0;
  Eigen::MatrixXcd entries;

  int count() const { return static_cast<int>(entries.rows()); }
  // Quantum-number indexed access.
  Complex at(int n, int n_prime) const {
    return entries(n - trap.n_min(), n_prime - trap.n_min());
  }
};

CouplingMatrix build_coupling_matrix(TrapModel trap, double eta, int count);

}  // namespace vibronic
