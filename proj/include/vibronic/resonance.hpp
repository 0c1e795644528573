#pragma once

#include <string>
#include <vector>

#include "vibronic/basis.hpp"

namespace vibronic {

// A Rabi resonance: degeneracy of the semidressed levels (n,+) and (n',-) on the
// circle Omega = sqrt(omega_r^2 + delta^2) = |E_n' - E_n| in the (delta, omega_r)
// half-plane.  Carriers (n = n') sit on the delta axis in the weak-field limit.
enum class ResonanceKind { Carrier, Red, Blue, Generalized };

struct ResonanceSpec {
  TrapModel trap;
  int n = 0;
  int n_prime = 0;
  int order = 0;       // n' - n
  double radius = 0.0; // |E_n' - E_n| in natural units
  ResonanceKind kind = ResonanceKind::Generalized;
};

std::string kind_name(ResonanceKind kind);

// All pairs with n <= n' <= n_max and 0 < n'-n <= k_max, plus carriers.
// Sorted by (radius, n).
std::vector<ResonanceSpec> enumerate_resonances(TrapModel trap, int n_max, int k_max);

// Red/blue only in the weak-field limit (omega_r ~ 0), by the sign of delta.
ResonanceKind classify_resonance_point(const ResonanceSpec& spec, double delta, double omega_r);

// Low-intensity splitting of the bare crossing: |Omega_nn'| = omega_r |<n|e^{ikx}|n'>|.
double weakfield_splitting(TrapModel trap, int n, int n_prime, const DriveParams& drive);

// Degenerate-perturbation splitting of the dressed avoided crossing.
//   general: (omega_r / 2 Omega) sqrt(omega_r^2 (C_n'n' - C_nn)^2
//                                     + 4 (delta^2 C_nn'^2 + Omega^2 S_nn'^2))
//   leading: lowest eta order (harmonic: omega_r eta^l sqrt(n_>!/n_<!)/l! times
//            |delta|/Omega for even l; hard wall: 4 omega_r n n'/(l^2 (n+n')^2)
//            times eta^2 |delta|/Omega even, 2 eta/pi odd).
// The carrier lies outside the eta-perturbative scheme: it is reported through the
// weak-field formula with eta_scheme_ok = false.
struct SplittingPrediction {
  double general = 0.0;
  double leading = 0.0;
  double isolation_ratio = 0.0;  // general / trap frequency unit
  double neighbor_gap = 0.0;     // distance to the nearest other resonance radius
  bool eta_scheme_ok = true;
};

SplittingPrediction perturbative_splitting_general(TrapModel trap, int n, int n_prime,
                                                   const DriveParams& drive);

// isolated iff general splitting / neighboring-resonance spacing < threshold.
// Spacing: trap unit (harmonic), actual nearest |E-difference| spacing (hard wall).
std::pair<bool, double> isolation_check(const SplittingPrediction& prediction, TrapModel trap,
                                        double threshold = 0.1);

}  // namespace vibronic
