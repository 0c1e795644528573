#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "vibronic/hamiltonian.hpp"
#include "vibronic/resonance.hpp"

namespace vibronic {

// Full eigendecomposition, eigenvalues ascending, eigenvectors as unitary columns.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

Spectrum diagonalize(const HamiltonianMatrix& h);
Eigen::VectorXd eigenvalues_only(const HamiltonianMatrix& h);

// Probability weight of an eigenvector in the two highest motional levels of the
// truncated basis; truncation-error monitor.
double tail_fraction(const Eigen::VectorXcd& v, const BasisMap& basis);

enum class ScanAxis { Detuning, Rabi };

struct ScanSpec {
  TrapModel trap;
  DriveParams drive;   // fixed fields; the scanned one is overwritten per grid point
  ScanAxis axis = ScanAxis::Detuning;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;       // number of grid points (>= 2), endpoints included
  int n_trunc = 0;
};

DriveParams drive_at(const ScanSpec& spec, double value);

// Semidressed label (n, s); at omega_r = 0, delta = 0 the g/e pair is reported with
// the omega_r -> 0+ convention.
struct BranchLabel {
  int n = 0;
  int sign = +1;
  bool operator==(const BranchLabel&) const = default;
};

struct TieBreakEvent {
  int point = 0;   // grid index where the ambiguity occurred
  int branch = 0;  // tracked branch id
};

// Eigenvalue branches tracked across the 1-D grid by global maximal eigenvector
// overlap between consecutive points.
struct LevelTrack {
  ScanSpec spec;
  std::vector<double> grid;
  std::vector<std::vector<double>> branch_energy;  // [branch][point]
  std::vector<std::vector<double>> branch_tail;    // [branch][point]
  std::vector<std::vector<int>> order;             // [point][sorted position] -> branch id
  std::vector<BranchLabel> labels_front;           // dominant labels at grid.front()
  std::vector<BranchLabel> labels_back;            // dominant labels at grid.back()
  std::vector<TieBreakEvent> tie_breaks;

  int branches() const { return static_cast<int>(branch_energy.size()); }
};

LevelTrack scan(const ScanSpec& spec);

// A located gap minimum between energy-adjacent levels, refined on the continuous
// parameter by golden-section re-diagonalization.
struct AvoidedCrossing {
  int branch_a = 0;  // tracked branch ids at the bracketing grid point
  int branch_b = 0;
  double param_star = 0.0;
  double gap = 0.0;
  BranchLabel label_a;  // participating semidressed labels at the minimum
  BranchLabel label_b;
  std::optional<SplittingPrediction> predicted;
  bool is_true_crossing = false;
  bool refined = true;
};

std::vector<AvoidedCrossing> find_avoided_crossings(const LevelTrack& track,
                                                    double param_tol = 1e-8,
                                                    double crossing_threshold = 1e-9);

// Drift of the lowest `levels` eigenvalues between consecutive truncations.
struct ConvergenceRow {
  int n_from = 0;
  int n_to = 0;
  double max_drift = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  std::optional<int> recommended;  // smallest N whose drift to the next N is < 1e-10
  int levels = 0;
};

ConvergenceReport convergence_probe(TrapModel trap, const DriveParams& drive,
                                    const std::vector<int>& n_list, int levels = 10);

}  // namespace vibronic
