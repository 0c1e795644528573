#include "vibronic/basis.hpp"

#include <cmath>
#include <numbers>

#include "vibronic/errors.hpp"

namespace vibronic {

namespace {

void check_quantum_number(TrapModel trap, int n) {
  if (n < trap.n_min()) {
    throw DomainError("motional quantum number n=" + std::to_string(n) + " invalid for " +
                      trap_name(trap) + " trap (n >= " + std::to_string(trap.n_min()) + ")");
  }
}

}  // namespace

std::string trap_name(TrapModel trap) {
  return trap.kind == TrapKind::Harmonic ? "harmonic" : "hardwall";
}

double motional_energy(TrapModel trap, int n) {
  check_quantum_number(trap, n);
  if (trap.kind == TrapKind::Harmonic) return static_cast<double>(n);
  return static_cast<double>(n) * static_cast<double>(n);
}

double motional_eigenfunction(TrapModel trap, int n, double x) {
  check_quantum_number(trap, n);
  if (trap.kind == TrapKind::Harmonic) {
    // Hermite-function recurrence, stable upward.
    const double p0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    if (n == 0) return p0;
    double prev = p0;
    double cur = std::numbers::sqrt2 * x * p0;
    for (int k = 2; k <= n; ++k) {
      const double next = std::sqrt(2.0 / k) * x * cur - std::sqrt((k - 1.0) / k) * prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  if (std::abs(x) > 0.5) {
    throw DomainError("hard-wall eigenfunction evaluated outside the well (|x| > a/2)");
  }
  const double arg = n * std::numbers::pi * x;
  return std::numbers::sqrt2 * (n % 2 == 1 ? std::cos(arg) : std::sin(arg));
}

void DriveParams::validate() const {
  if (!(std::isfinite(omega_r) && std::isfinite(delta) && std::isfinite(eta))) {
    throw DomainError("drive parameters must be finite");
  }
  if (omega_r < 0.0) throw DomainError("omega_r must be >= 0 (real on-resonance Rabi frequency)");
  if (eta < 0.0) throw DomainError("eta must be >= 0");
}

int BasisMap::flat(Internal state, int n) const {
  const int offset = n - trap.n_min();
  if (offset < 0 || offset >= n_trunc) {
    throw DomainError("quantum number n=" + std::to_string(n) + " outside truncated basis");
  }
  return 2 * offset + (state == Internal::e ? 1 : 0);
}

std::pair<Internal, int> BasisMap::unflat(int index) const {
  if (index < 0 || index >= dim()) throw DomainError("flat index outside truncated basis");
  return {index % 2 == 1 ? Internal::e : Internal::g, trap.n_min() + index / 2};
}

}  // namespace vibronic
