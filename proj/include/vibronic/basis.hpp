#pragma once

#include <cmath>
#include <string>
#include <utility>

namespace vibronic {

// Internal two-level state; sigma_z = |e><e| - |g><g|.
enum class Internal { g, e };

enum class TrapKind { Harmonic, HardWall };

// Natural units throughout: hbar = 1.
//   Harmonic: omega_T = 1, oscillator length sqrt(hbar/m omega) = 1 (so x_0 = 1/sqrt(2)),
//             E_n = n for n = 0,1,2,...
//   HardWall: well width a = 1, energy unit E_1 = hbar^2 pi^2/(2 m a^2) = 1,
//             E_n = n^2 for n = 1,2,...  The frequency unit is omega_1 = E_1/hbar.
struct TrapModel {
  TrapKind kind = TrapKind::Harmonic;

  int n_min() const { return kind == TrapKind::Harmonic ? 0 : 1; }
  bool operator==(const TrapModel&) const = default;
};

inline TrapModel harmonic_trap() { return {TrapKind::Harmonic}; }
inline TrapModel hardwall_trap() { return {TrapKind::HardWall}; }

std::string trap_name(TrapModel trap);

// Motional level energy in natural units.  Throws DomainError for n outside the
// trap's labeling (n >= 0 harmonic, n >= 1 hard wall).
double motional_energy(TrapModel trap, int n);

// Normalized motional eigenfunction phi_n(x).  Harmonic: Hermite-Gaussian on the
// real line; hard wall: cosine (odd n) / sine (even n) on [-1/2, 1/2], vanishing at
// the walls, positive sqrt(2) coefficient.  Used by the quadrature oracle and tests.
double motional_eigenfunction(TrapModel trap, int n, double x);

// Laser drive.  omega_r is the on-resonance Rabi frequency (real, >= 0), delta the
// detuning omega_L - omega_0, eta the Lamb-Dicke parameter (k_L x_0 harmonic,
// k_L a / pi hard wall).  All in the trap's natural frequency unit.
struct DriveParams {
  double omega_r = 0.0;
  double delta = 0.0;
  double eta = 0.0;

  // Detuning-adapted Rabi frequency sqrt(omega_r^2 + delta^2).
  double omega() const { return std::hypot(omega_r, delta); }
  void validate() const;  // throws DomainError on omega_r < 0, eta < 0, or non-finite fields
};

// Flat indexing of the truncated product basis {|g,n>, |e,n>}.  Interleaved layout:
// flat = 2*(n - n_min) + (internal == e), dim = 2*n_trunc.
struct BasisMap {
  TrapModel trap;
  int n_trunc = 0;

  int dim() const { return 2 * n_trunc; }
  int n_max() const { return trap.n_min() + n_trunc - 1; }
  int flat(Internal state, int n) const;
  std::pair<Internal, int> unflat(int index) const;
};

}  // namespace vibronic
