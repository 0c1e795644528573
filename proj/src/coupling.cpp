#include "vibronic/coupling.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "vibronic/errors.hpp"

namespace vibronic {

namespace {

constexpr double kPi = std::numbers::pi;

// i^k for k mod 4; exact phases, no complex pow.
const std::array<Complex, 4> kIPow = {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                      Complex{0, -1}};

void check_pair(TrapModel trap, int n, int n_prime) {
  if (n < trap.n_min() || n_prime < trap.n_min()) {
    throw DomainError("coupling quantum numbers must be >= " + std::to_string(trap.n_min()) +
                      " for the " + trap_name(trap) + " trap");
  }
}

// sin(t*pi/2)/t with the removable point t = 0.
double half_sinc(double t) {
  if (t == 0.0) return 0.5 * kPi;
  return std::sin(0.5 * kPi * t) / t;
}

// Reduction sign in sin/cos(eta*pi/2) = sign * sin((eta - sigma)*pi/2) for integer
// sigma of the branch parity (sin branch: sigma even; cos branch: sigma odd).
double trig_shift_sign(int sigma) {
  if (sigma % 2 == 0) return (sigma / 2) % 2 == 0 ? 1.0 : -1.0;
  return ((sigma - 1) / 2) % 2 == 0 ? -1.0 : 1.0;
}

}  // namespace

double laguerre_assoc(int n, int alpha, double x) {
  if (n < 0 || alpha < 0 || x < 0.0) {
    throw DomainError("laguerre_assoc requires n >= 0, alpha >= 0, x >= 0");
  }
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex harmonic_coupling_exact(int n, int n_prime, double eta) {
  check_pair(harmonic_trap(), n, n_prime);
  if (eta == 0.0) return n == n_prime ? 1.0 : 0.0;
  const int lo = std::min(n, n_prime);
  const int hi = std::max(n, n_prime);
  const int d = hi - lo;
  // Factorial ratio via log-gamma; |coupling| <= 1 so no overflow anywhere.
  const double mag = std::exp(-0.5 * eta * eta + 0.5 * (std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0))) *
                     std::pow(eta, d) * laguerre_assoc(lo, d, eta * eta);
  return kIPow[d % 4] * mag;
}

Complex harmonic_coupling_leading(int n, int n_prime, double eta) {
  check_pair(harmonic_trap(), n, n_prime);
  const int lo = std::min(n, n_prime);
  const int hi = std::max(n, n_prime);
  const int d = hi - lo;
  if (d == 0) return 1.0;
  const double mag =
      std::pow(eta, d) * std::exp(0.5 * (std::lgamma(hi + 1.0) - std::lgamma(lo + 1.0)) - std::lgamma(d + 1.0));
  return kIPow[d % 4] * mag;
}

Complex hardwall_coupling_exact(int n, int n_prime, double eta) {
  check_pair(hardwall_trap(), n, n_prime);
  if (eta == 0.0) return n == n_prime ? 1.0 : 0.0;
  const int d = std::abs(n - n_prime);
  const int s = n + n_prime;
  // Parity phase fixed by the defining integral with the positive-coefficient
  // eigenfunctions: -i^d for even d, (-1)^{n_>} i^d for odd d.
  const Complex phase =
      (d % 2 == 0 ? -1.0 : (std::max(n, n_prime) % 2 == 0 ? 1.0 : -1.0)) * kIPow[d % 4];
  const double amp = eta * 8.0 * n * n_prime / kPi;

  // Nearer root of Dt; within half a unit of it, factor the removable zero out
  // exactly via the trig-shift identity.
  const int sigma = std::abs(eta - d) <= std::abs(eta - s) ? d : s;
  const int other = sigma == d ? s : d;
  const double t = eta - sigma;
  if (std::abs(t) < 0.5) {
    const double core = trig_shift_sign(sigma) * half_sinc(t) /
                        ((eta + sigma) * (eta * eta - static_cast<double>(other) * other));
    return phase * amp * core;
  }
  const double trig = d % 2 == 0 ? std::sin(0.5 * kPi * eta) : std::cos(0.5 * kPi * eta);
  const double denom = (eta * eta - static_cast<double>(d) * d) * (eta * eta - static_cast<double>(s) * s);
  return phase * amp * trig / denom;
}

Complex hardwall_coupling_leading(int n, int n_prime, double eta) {
  check_pair(hardwall_trap(), n, n_prime);
  if (n == n_prime) {
    throw DomainError("hard-wall carrier has no leading-order form; use hardwall_coupling_exact");
  }
  const int d = std::abs(n - n_prime);
  const int s = n + n_prime;
  const Complex phase =
      (d % 2 == 0 ? -1.0 : (std::max(n, n_prime) % 2 == 0 ? 1.0 : -1.0)) * kIPow[d % 4];
  const double base = 4.0 * n * n_prime / (static_cast<double>(d) * d * s * s);
  return phase * base * (d % 2 == 0 ? eta * eta : 2.0 * eta / kPi);
}

Complex coupling_exact(TrapModel trap, int n, int n_prime, double eta) {
  return trap.kind == TrapKind::Harmonic ? harmonic_coupling_exact(n, n_prime, eta)
                                         : hardwall_coupling_exact(n, n_prime, eta);
}

Complex coupling_leading(TrapModel trap, int n, int n_prime, double eta) {
  return trap.kind == TrapKind::Harmonic ? harmonic_coupling_leading(n, n_prime, eta)
                                         : hardwall_coupling_leading(n, n_prime, eta);
}

std::pair<double, double> cos_sin_elements(TrapModel trap, int n, int n_prime, double eta) {
  const Complex k = coupling_exact(trap, n, n_prime, eta);
  return {k.real(), k.imag()};
}

CouplingMatrix build_coupling_matrix(TrapModel trap, double eta, int count) {
  if (count < 1) throw DomainError("coupling matrix needs count >= 1");
  CouplingMatrix k{trap, eta, Eigen::MatrixXcd(count, count)};
  const int n0 = trap.n_min();
  for (int i = 0; i < count; ++i) {
    for (int j = i; j < count; ++j) {
      const Complex v = coupling_exact(trap, n0 + i, n0 + j, eta);
      k.entries(i, j) = v;
      k.entries(j, i) = v;  // symmetric by construction
    }
  }
  return k;
}

}  // namespace vibronic
