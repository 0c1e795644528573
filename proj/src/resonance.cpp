#include "vibronic/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vibronic/coupling.hpp"
#include "vibronic/errors.hpp"

namespace vibronic {

namespace {

// Radii achievable as |m'^2 - m^2| with 1 <= m < m': every odd integer >= 3 and
// every multiple of 4 that is >= 8.
bool hardwall_radius_achievable(int r) {
  if (r >= 3 && r % 2 == 1) return true;
  return r >= 8 && r % 4 == 0;
}

double neighbor_radius_gap(TrapModel trap, int n, int n_prime) {
  if (trap.kind == TrapKind::Harmonic) return 1.0;
  const int r = static_cast<int>(std::lround(
      std::abs(motional_energy(trap, n_prime) - motional_energy(trap, n))));
  for (int d = 1;; ++d) {
    if (hardwall_radius_achievable(r - d) || hardwall_radius_achievable(r + d)) return d;
  }
}

}  // namespace

std::string kind_name(ResonanceKind kind) {
  switch (kind) {
    case ResonanceKind::Carrier: return "carrier";
    case ResonanceKind::Red: return "red";
    case ResonanceKind::Blue: return "blue";
    case ResonanceKind::Generalized: return "generalized";
  }
  return "generalized";
}

std::vector<ResonanceSpec> enumerate_resonances(TrapModel trap, int n_max, int k_max) {
  if (n_max < trap.n_min() || k_max < 1) {
    throw DomainError("enumerate_resonances requires n_max within trap labeling and k_max >= 1");
  }
  std::vector<ResonanceSpec> out;
  for (int n = trap.n_min(); n <= n_max; ++n) {
    out.push_back({trap, n, n, 0, 0.0, ResonanceKind::Carrier});
    for (int k = 1; k <= k_max && n + k <= n_max; ++k) {
      const double radius = motional_energy(trap, n + k) - motional_energy(trap, n);
      out.push_back({trap, n, n + k, k, radius, ResonanceKind::Generalized});
    }
  }
  std::sort(out.begin(), out.end(), [](const ResonanceSpec& a, const ResonanceSpec& b) {
    if (a.radius != b.radius) return a.radius < b.radius;
    return a.n < b.n;
  });
  return out;
}

ResonanceKind classify_resonance_point(const ResonanceSpec& spec, double delta, double omega_r) {
  if (spec.order == 0) return ResonanceKind::Carrier;
  if (std::abs(omega_r) <= 1e-9 * std::max(1.0, spec.radius)) {
    return delta > 0.0 ? ResonanceKind::Blue : ResonanceKind::Red;
  }
  return ResonanceKind::Generalized;
}

double weakfield_splitting(TrapModel trap, int n, int n_prime, const DriveParams& drive) {
  drive.validate();
  return drive.omega_r * std::abs(coupling_exact(trap, n, n_prime, drive.eta));
}

SplittingPrediction perturbative_splitting_general(TrapModel trap, int n, int n_prime,
                                                   const DriveParams& drive) {
  drive.validate();
  const double omega = drive.omega();
  if (omega <= 0.0) throw DomainError("splitting prediction requires Omega > 0");

  SplittingPrediction pred;
  pred.neighbor_gap = neighbor_radius_gap(trap, n, n_prime);

  if (n == n_prime) {
    // Carrier: already split by the semidressed Hamiltonian itself, outside the
    // eta-perturbative scheme.  Report the weak-field values.
    pred.eta_scheme_ok = false;
    pred.general = weakfield_splitting(trap, n, n_prime, drive);
    pred.leading = drive.omega_r;
    pred.neighbor_gap = trap.kind == TrapKind::Harmonic ? 1.0 : 3.0;  // nearest radius from 0
    pred.isolation_ratio = pred.general;
    return pred;
  }

  const double c_nn = cos_sin_elements(trap, n, n, drive.eta).first;
  const double c_pp = cos_sin_elements(trap, n_prime, n_prime, drive.eta).first;
  const auto [c_np, s_np] = cos_sin_elements(trap, n, n_prime, drive.eta);
  const double diag = drive.omega_r * (c_pp - c_nn);
  const double off = 4.0 * (drive.delta * drive.delta * c_np * c_np + omega * omega * s_np * s_np);
  pred.general = 0.5 * drive.omega_r / omega * std::sqrt(diag * diag + off);

  const int lo = std::min(n, n_prime);
  const int hi = std::max(n, n_prime);
  const int l = hi - lo;
  const double angular = l % 2 == 0 ? std::abs(drive.delta) / omega : 1.0;
  if (trap.kind == TrapKind::Harmonic) {
    const double fac =
        std::exp(0.5 * (std::lgamma(hi + 1.0) - std::lgamma(lo + 1.0)) - std::lgamma(l + 1.0));
    pred.leading = drive.omega_r * std::pow(drive.eta, l) * fac * angular;
  } else {
    const double base =
        4.0 * n * n_prime / (static_cast<double>(l) * l * (n + n_prime) * (n + n_prime));
    pred.leading = drive.omega_r * base *
                   (l % 2 == 0 ? drive.eta * drive.eta * angular
                               : 2.0 * drive.eta / std::numbers::pi);
  }
  pred.isolation_ratio = pred.general;  // trap frequency unit is 1 in natural units
  return pred;
}

std::pair<bool, double> isolation_check(const SplittingPrediction& prediction, TrapModel trap,
                                        double threshold) {
  const double spacing = trap.kind == TrapKind::Harmonic ? 1.0 : prediction.neighbor_gap;
  const double ratio = prediction.general / spacing;
  return {ratio < threshold, ratio};
}

}  // namespace vibronic
