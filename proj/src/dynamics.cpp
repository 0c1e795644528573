#include "vibronic/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vibronic/errors.hpp"
#include "vibronic/spectrum.hpp"

namespace vibronic {

std::string bare_label(Internal state, int n) {
  return (state == Internal::g ? "g" : "e") + std::to_string(n);
}

std::string semidressed_label(int n, int sign) {
  return std::to_string(n) + (sign > 0 ? "+" : "-");
}

Eigen::VectorXcd basis_state(const BasisMap& basis, Internal state, int n) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.dim());
  v(basis.flat(state, n)) = 1.0;
  return v;
}

Eigen::MatrixXcd evolve_states(const HamiltonianMatrix& h, const Eigen::VectorXcd& psi0,
                               const std::vector<double>& times) {
  if (psi0.size() != h.dim()) throw DomainError("psi0 dimension does not match Hamiltonian");
  if (std::abs(psi0.norm() - 1.0) > 1e-8) throw DomainError("psi0 must be normalized");
  const Spectrum spec = diagonalize(h);
  const Eigen::VectorXcd coeff = spec.eigenvectors.adjoint() * psi0;
  Eigen::MatrixXcd states(h.dim(), times.size());
  for (std::size_t t = 0; t < times.size(); ++t) {
    const Eigen::ArrayXcd phase =
        (Complex(0.0, -1.0) * times[t] * spec.eigenvalues.array()).exp();
    states.col(t) = spec.eigenvectors * (phase * coeff.array()).matrix();
  }
  return states;
}

EvolutionTrace evolve(const HamiltonianMatrix& h, const Eigen::VectorXcd& psi0, double t_final,
                      int steps, Frame frame) {
  if (steps < 1 || !(t_final > 0.0)) throw DomainError("evolve needs steps >= 1 and t_final > 0");

  EvolutionTrace trace;
  trace.frame = frame;
  trace.times.resize(steps + 1);
  for (int t = 0; t <= steps; ++t) trace.times[t] = t_final * t / steps;

  const Eigen::MatrixXcd states = evolve_states(h, psi0, trace.times);

  const int n_trunc = h.basis.n_trunc;
  trace.labels.reserve(2 * n_trunc);
  trace.populations.resize(2 * n_trunc, steps + 1);
  trace.norm_history.resize(steps + 1);
  for (int t = 0; t <= steps; ++t) trace.norm_history[t] = states.col(t).norm();

  if (frame == Frame::Bare) {
    for (int i = 0; i < n_trunc; ++i) {
      const int n = h.trap.n_min() + i;
      trace.labels.push_back(bare_label(Internal::g, n));
      trace.labels.push_back(bare_label(Internal::e, n));
    }
    trace.populations = states.cwiseAbs2().real();
  } else {
    // Projection onto |eps_{n,s}> touches only the (g,n),(e,n) components.
    const SemidressedPair pair = semidressed_spectrum(h.trap, h.drive, h.trap.n_min());
    for (int i = 0; i < n_trunc; ++i) {
      const int n = h.trap.n_min() + i;
      trace.labels.push_back(semidressed_label(n, +1));
      trace.labels.push_back(semidressed_label(n, -1));
      for (int t = 0; t <= steps; ++t) {
        const Complex g = states(2 * i, t);
        const Complex e = states(2 * i + 1, t);
        trace.populations(2 * i, t) =
            std::norm(std::conj(pair.plus.state(0)) * g + std::conj(pair.plus.state(1)) * e);
        trace.populations(2 * i + 1, t) =
            std::norm(std::conj(pair.minus.state(0)) * g + std::conj(pair.minus.state(1)) * e);
      }
    }
  }
  return trace;
}

FrequencyEstimate extract_frequency(const EvolutionTrace& trace, const std::string& label) {
  const auto it = std::find(trace.labels.begin(), trace.labels.end(), label);
  if (it == trace.labels.end()) throw DomainError("unknown population label '" + label + "'");
  const auto row = static_cast<Eigen::Index>(it - trace.labels.begin());
  const Eigen::Index m = trace.populations.cols();
  if (m < 8) throw DomainError("trace too short for frequency extraction");

  const Eigen::VectorXd pop = trace.populations.row(row);
  FrequencyEstimate est;
  est.contrast = pop.maxCoeff() - pop.minCoeff();
  est.low_contrast = est.contrast < 0.05;

  // Hann-windowed, mean-removed DFT magnitudes up to Nyquist.
  const double mean = pop.mean();
  Eigen::VectorXd x(m);
  for (Eigen::Index t = 0; t < m; ++t) {
    const double w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * t / (m - 1));
    x(t) = (pop(t) - mean) * w;
  }
  const Eigen::Index half = m / 2;
  Eigen::VectorXd mag(half + 1);
  for (Eigen::Index k = 0; k <= half; ++k) {
    const double ang = -2.0 * std::numbers::pi * k / m;
    const Complex step(std::cos(ang), std::sin(ang));
    Complex rot(1.0, 0.0), acc(0.0, 0.0);
    for (Eigen::Index t = 0; t < m; ++t) {
      acc += x(t) * rot;
      rot *= step;
    }
    mag(k) = std::abs(acc);
  }

  Eigen::Index peak = 1;
  for (Eigen::Index k = 2; k < half; ++k) {
    if (mag(k) > mag(peak)) peak = k;
  }
  std::vector<double> interior(mag.data() + 1, mag.data() + half);
  std::nth_element(interior.begin(), interior.begin() + interior.size() / 2, interior.end());
  const double median = interior[interior.size() / 2];
  est.has_peak = mag(peak) > std::max(1e-12 * static_cast<double>(m), 10.0 * median);
  if (!est.has_peak) return est;

  // Log-parabolic refinement of the peak bin.
  double shift = 0.0;
  if (peak > 0 && peak + 1 <= half && mag(peak - 1) > 0.0 && mag(peak + 1) > 0.0) {
    const double lm = std::log(mag(peak - 1));
    const double l0 = std::log(mag(peak));
    const double lp = std::log(mag(peak + 1));
    const double denom = lm - 2.0 * l0 + lp;
    if (denom != 0.0) shift = std::clamp(0.5 * (lm - lp) / denom, -0.5, 0.5);
  }
  const double dt = trace.times[1] - trace.times[0];
  est.omega = 2.0 * std::numbers::pi * (peak + shift) / (static_cast<double>(m) * dt);
  return est;
}

}  // namespace vibronic
