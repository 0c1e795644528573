// Independent evaluation of the coupling integrals by adaptive quadrature.
// Deliberately shares nothing with the closed forms in coupling.cpp beyond the
// eigenfunctions themselves.

#include <cmath>
#include <cstdio>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "vibronic/coupling.hpp"
#include "vibronic/errors.hpp"

namespace vibronic {

namespace {

using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;

double integrate_checked(const auto& f, double a, double b, double abs_tol) {
  // Termination target slightly under the requested accuracy; pushing the
  // tolerance to machine epsilon only accumulates per-panel round-off in the
  // returned estimate.
  double error = 0.0;
  const double value = Quad::integrate(f, a, b, 15, 0.1 * abs_tol, &error);
  if (!(error <= abs_tol)) {
    char msg[96];
    std::snprintf(msg, sizeof(msg),
                  "coupling quadrature did not reach requested accuracy (error estimate %.3e)",
                  error);
    throw NumericalError(msg);
  }
  return value;
}

}  // namespace

Complex coupling_quadrature_oracle(TrapModel trap, int n, int n_prime, double eta, double abs_tol) {
  if (n < trap.n_min() || n_prime < trap.n_min()) {
    throw DomainError("oracle quantum numbers invalid for trap");
  }
  double k_l = 0.0, lo = 0.0, hi = 0.0;
  if (trap.kind == TrapKind::Harmonic) {
    // eta = k_L x_0 with x_0 = 1/sqrt(2) in oscillator units.
    k_l = eta * std::numbers::sqrt2;
    hi = std::sqrt(2.0 * std::max(n, n_prime) + 1.0) + 12.0;  // turning point + Gaussian tail
    lo = -hi;
  } else {
    k_l = eta * std::numbers::pi;
    lo = -0.5;
    hi = 0.5;
  }
  const auto product = [&](double x) {
    return motional_eigenfunction(trap, n, x) * motional_eigenfunction(trap, n_prime, x);
  };
  const double re = integrate_checked([&](double x) { return product(x) * std::cos(k_l * x); },
                                      lo, hi, abs_tol);
  const double im = integrate_checked([&](double x) { return product(x) * std::sin(k_l * x); },
                                      lo, hi, abs_tol);
  return {re, im};
}

}  // namespace vibronic
