#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vibronic/hamiltonian.hpp"

namespace vibronic {

// Population frame: bare product states |g/e, n> or semidressed states |eps_{n,+-}>.
enum class Frame { Bare, Semidressed };

std::string bare_label(Internal state, int n);
std::string semidressed_label(int n, int sign);

Eigen::VectorXcd basis_state(const BasisMap& basis, Internal state, int n);

struct EvolutionTrace {
  Frame frame = Frame::Bare;
  std::vector<std::string> labels;   // one per projector, ordered like the flat basis
  std::vector<double> times;         // steps+1 samples including t = 0 and t_final
  Eigen::MatrixXd populations;       // labels x times
  std::vector<double> norm_history;  // ||psi(t)||, should stay at 1
};

// Exact evolution of the time-independent Hamiltonian by spectral decomposition:
// psi(t) = sum_k e^{-i lambda_k t} <v_k|psi0> v_k.  psi0 must be normalized.
EvolutionTrace evolve(const HamiltonianMatrix& h, const Eigen::VectorXcd& psi0, double t_final,
                      int steps, Frame frame = Frame::Bare);

// State vectors at the given times (columns); used by evolve and by invariants
// that need psi(t) itself.
Eigen::MatrixXcd evolve_states(const HamiltonianMatrix& h, const Eigen::VectorXcd& psi0,
                               const std::vector<double>& times);

// Dominant oscillation frequency (angular, natural units) of one labeled
// population, from the windowed DFT peak with log-parabolic interpolation.
struct FrequencyEstimate {
  double omega = 0.0;
  double contrast = 0.0;    // max - min of the population
  bool has_peak = false;    // false: no spectral line above the noise floor
  bool low_contrast = false;  // contrast < 5%
};

FrequencyEstimate extract_frequency(const EvolutionTrace& trace, const std::string& label);

}  // namespace vibronic
