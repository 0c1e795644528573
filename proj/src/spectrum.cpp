#include "vibronic/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vibronic/assignment.hpp"
#include "vibronic/errors.hpp"

namespace vibronic {

namespace {

constexpr double kOverlapTie = 1e-6;

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solve(const HamiltonianMatrix& h, bool vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es;
  es.compute(h.mat, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver failed to converge");
  }
  return es;
}

// The semidressed (g,e) amplitudes are n-independent; two 2-vectors cover the
// whole ladder.
struct SemidressedFrame {
  Eigen::Vector2cd plus;
  Eigen::Vector2cd minus;
};

SemidressedFrame semidressed_frame(TrapModel trap, const DriveParams& drive) {
  const SemidressedPair pair = semidressed_spectrum(trap, drive, trap.n_min());
  return {pair.plus.state, pair.minus.state};
}

BranchLabel dominant_label(const Eigen::VectorXcd& v, const SemidressedFrame& frame,
                           const BasisMap& basis) {
  BranchLabel best;
  double best_w = -1.0;
  for (int i = 0; i < basis.n_trunc; ++i) {
    for (int sign : {+1, -1}) {
      const Eigen::Vector2cd& amp = sign > 0 ? frame.plus : frame.minus;
      const Complex a = std::conj(amp(0)) * v(2 * i) + std::conj(amp(1)) * v(2 * i + 1);
      const double w = std::norm(a);
      if (w > best_w) {
        best_w = w;
        best = {basis.trap.n_min() + i, sign};
      }
    }
  }
  return best;
}

// Top two semidressed labels of the 2-dim subspace spanned by two eigenvectors.
std::pair<BranchLabel, BranchLabel> subspace_labels(const Eigen::VectorXcd& va,
                                                    const Eigen::VectorXcd& vb,
                                                    const SemidressedFrame& frame,
                                                    const BasisMap& basis) {
  BranchLabel first, second;
  double w1 = -1.0, w2 = -2.0;
  for (int i = 0; i < basis.n_trunc; ++i) {
    for (int sign : {+1, -1}) {
      const Eigen::Vector2cd& amp = sign > 0 ? frame.plus : frame.minus;
      const Complex aa = std::conj(amp(0)) * va(2 * i) + std::conj(amp(1)) * va(2 * i + 1);
      const Complex ab = std::conj(amp(0)) * vb(2 * i) + std::conj(amp(1)) * vb(2 * i + 1);
      const double w = std::norm(aa) + std::norm(ab);
      const BranchLabel label{basis.trap.n_min() + i, sign};
      if (w > w1) {
        w2 = w1;
        second = first;
        w1 = w;
        first = label;
      } else if (w > w2) {
        w2 = w;
        second = label;
      }
    }
  }
  return {first, second};
}

}  // namespace

Spectrum diagonalize(const HamiltonianMatrix& h) {
  const auto es = solve(h, true);
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXd eigenvalues_only(const HamiltonianMatrix& h) {
  return solve(h, false).eigenvalues();
}

double tail_fraction(const Eigen::VectorXcd& v, const BasisMap& basis) {
  if (v.size() != basis.dim() || basis.n_trunc < 2) {
    throw DomainError("tail_fraction: vector does not match basis");
  }
  return v.tail(4).squaredNorm();  // both internal states of the two highest n
}

DriveParams drive_at(const ScanSpec& spec, double value) {
  DriveParams d = spec.drive;
  (spec.axis == ScanAxis::Detuning ? d.delta : d.omega_r) = value;
  return d;
}

LevelTrack scan(const ScanSpec& spec) {
  spec.drive.validate();
  if (spec.steps < 2) throw DomainError("scan needs steps >= 2");
  if (!(std::isfinite(spec.lo) && std::isfinite(spec.hi)) || spec.lo >= spec.hi) {
    throw DomainError("scan needs a finite range with lo < hi");
  }
  if (spec.n_trunc < 2) throw DomainError("scan needs n_trunc >= 2");
  if (spec.axis == ScanAxis::Rabi && spec.lo < 0.0) {
    throw DomainError("rabi scan range must be non-negative");
  }

  const CouplingMatrix coupling = build_coupling_matrix(spec.trap, spec.drive.eta, spec.n_trunc);
  const BasisMap basis{spec.trap, spec.n_trunc};
  const int dim = basis.dim();

  LevelTrack track;
  track.spec = spec;
  track.grid.resize(spec.steps);
  track.branch_energy.assign(dim, std::vector<double>(spec.steps, 0.0));
  track.branch_tail.assign(dim, std::vector<double>(spec.steps, 0.0));
  track.order.assign(spec.steps, std::vector<int>(dim, 0));

  Eigen::MatrixXcd v_prev;
  Eigen::VectorXd ev_prev;
  std::vector<int> slot(dim);  // branch id -> eigen index at the current point

  for (int k = 0; k < spec.steps; ++k) {
    const double p = spec.lo + (spec.hi - spec.lo) * k / (spec.steps - 1);
    track.grid[k] = p;
    const HamiltonianMatrix h =
        build_full_hamiltonian(spec.trap, drive_at(spec, p), spec.n_trunc, coupling);
    const auto es = solve(h, true);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const Eigen::MatrixXcd& v = es.eigenvectors();

    if (k == 0) {
      for (int b = 0; b < dim; ++b) slot[b] = b;
    } else {
      const Eigen::MatrixXd overlap = (v_prev.adjoint() * v).cwiseAbs();
      std::vector<int> perm = max_weight_assignment(overlap.cwiseProduct(overlap));

      // Ambiguity pass: overlaps tied within kOverlapTie resolve by eigenvalue
      // proximity to the previous branch energy.
      std::vector<int> prev_branch(dim, 0);  // eigen index at k-1 -> branch id
      for (int b = 0; b < dim; ++b) prev_branch[slot[b]] = b;
      for (int i = 0; i < dim; ++i) {
        const int assigned = perm[i];
        int chosen = assigned;
        double best_dist = std::abs(ev(assigned) - ev_prev(i));
        for (int j = 0; j < dim; ++j) {
          if (j == assigned || std::abs(overlap(i, j) - overlap(i, assigned)) >= kOverlapTie) {
            continue;
          }
          const double dist = std::abs(ev(j) - ev_prev(i));
          if (dist < best_dist) {
            best_dist = dist;
            chosen = j;
          }
        }
        if (chosen != assigned) {
          for (int i2 = 0; i2 < dim; ++i2) {
            if (perm[i2] == chosen) {
              perm[i2] = assigned;
              break;
            }
          }
          perm[i] = chosen;
          track.tie_breaks.push_back({k, prev_branch[i]});
        }
      }
      for (int b = 0; b < dim; ++b) slot[b] = perm[slot[b]];
    }

    for (int b = 0; b < dim; ++b) {
      track.branch_energy[b][k] = ev(slot[b]);
      track.branch_tail[b][k] = tail_fraction(v.col(slot[b]), basis);
      track.order[k][slot[b]] = b;
    }
    if (k == 0 || k == spec.steps - 1) {
      const SemidressedFrame frame = semidressed_frame(spec.trap, drive_at(spec, p));
      auto& labels = k == 0 ? track.labels_front : track.labels_back;
      labels.resize(dim);
      for (int b = 0; b < dim; ++b) labels[b] = dominant_label(v.col(slot[b]), frame, basis);
    }
    v_prev = v;
    ev_prev = ev;
  }
  return track;
}

std::vector<AvoidedCrossing> find_avoided_crossings(const LevelTrack& track, double param_tol,
                                                    double crossing_threshold) {
  const ScanSpec& spec = track.spec;
  const int steps = static_cast<int>(track.grid.size());
  if (steps < 3) throw DomainError("crossing detection needs a scan with >= 3 points");
  const int dim = track.branches();
  const BasisMap basis{spec.trap, spec.n_trunc};
  const CouplingMatrix coupling = build_coupling_matrix(spec.trap, spec.drive.eta, spec.n_trunc);

  // Energy-adjacent gaps from the per-point sorted order.
  const auto sorted_energy = [&](int k, int pos) {
    return track.branch_energy[track.order[k][pos]][k];
  };

  constexpr double kGolden = 0.6180339887498949;
  std::vector<AvoidedCrossing> out;

  for (int i = 0; i + 1 < dim; ++i) {
    double last_param = -std::numeric_limits<double>::infinity();
    for (int k = 1; k + 1 < steps; ++k) {
      const double g_prev = sorted_energy(k - 1, i + 1) - sorted_energy(k - 1, i);
      const double g_here = sorted_energy(k, i + 1) - sorted_energy(k, i);
      const double g_next = sorted_energy(k + 1, i + 1) - sorted_energy(k + 1, i);
      if (!(g_here < g_prev && g_here <= g_next)) continue;

      AvoidedCrossing crossing;
      crossing.branch_a = track.order[k][i];
      crossing.branch_b = track.order[k][i + 1];
      crossing.param_star = track.grid[k];
      crossing.gap = g_here;

      const auto gap_at = [&](double p) {
        const Eigen::VectorXd ev = eigenvalues_only(
            build_full_hamiltonian(spec.trap, drive_at(spec, p), spec.n_trunc, coupling));
        return ev(i + 1) - ev(i);
      };
      try {
        // Tighter than param_tol: at a symmetry-protected crossing the gap is a
        // slope-1 V, so the measured minimum resolves only as well as the
        // bracket does.
        const double tol = std::min(param_tol, 1e-12);
        double a = track.grid[k - 1], b = track.grid[k + 1];
        double c = b - kGolden * (b - a), d = a + kGolden * (b - a);
        double fc = gap_at(c), fd = gap_at(d);
        while (b - a > tol) {
          if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGolden * (b - a);
            fc = gap_at(c);
          } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGolden * (b - a);
            fd = gap_at(d);
          }
        }
        crossing.param_star = 0.5 * (a + b);
        crossing.refined = true;
      } catch (const NumericalError&) {
        crossing.refined = false;  // keep the grid-point bracket values
      }

      // Gap and participating labels at the located minimum.
      const DriveParams local = drive_at(spec, crossing.param_star);
      const auto es =
          solve(build_full_hamiltonian(spec.trap, local, spec.n_trunc, coupling), true);
      crossing.gap = es.eigenvalues()(i + 1) - es.eigenvalues()(i);
      const SemidressedFrame frame = semidressed_frame(spec.trap, local);
      const auto [la, lb] =
          subspace_labels(es.eigenvectors().col(i), es.eigenvectors().col(i + 1), frame, basis);
      crossing.label_a = la;
      crossing.label_b = lb;
      crossing.is_true_crossing = crossing.gap < crossing_threshold;

      if (la.sign != lb.sign) {
        const BranchLabel plus = la.sign > 0 ? la : lb;
        const BranchLabel minus = la.sign > 0 ? lb : la;
        crossing.predicted =
            perturbative_splitting_general(spec.trap, plus.n, minus.n, local);
      }

      // Merge duplicate detections of the same minimum (noise plateaus).
      const double cell = track.grid[k + 1] - track.grid[k - 1];
      if (crossing.param_star - last_param < cell && !out.empty() &&
          out.back().branch_a == crossing.branch_a && out.back().branch_b == crossing.branch_b) {
        if (crossing.gap < out.back().gap) out.back() = crossing;
      } else {
        out.push_back(crossing);
      }
      last_param = crossing.param_star;
    }
  }

  std::sort(out.begin(), out.end(), [](const AvoidedCrossing& a, const AvoidedCrossing& b) {
    if (a.param_star != b.param_star) return a.param_star < b.param_star;
    return a.branch_a < b.branch_a;
  });
  return out;
}

ConvergenceReport convergence_probe(TrapModel trap, const DriveParams& drive,
                                    const std::vector<int>& n_list, int levels) {
  drive.validate();
  if (n_list.size() < 2) throw DomainError("convergence probe needs >= 2 truncations");
  if (!std::is_sorted(n_list.begin(), n_list.end()) || n_list.front() < 2) {
    throw DomainError("truncation list must be ascending with entries >= 2");
  }
  if (levels < 1 || levels > 2 * n_list.front()) {
    throw DomainError("levels must be in [1, 2*smallest truncation]");
  }

  ConvergenceReport report;
  report.levels = levels;
  std::vector<Eigen::VectorXd> lows;
  for (const int n : n_list) {
    lows.push_back(eigenvalues_only(build_full_hamiltonian(trap, drive, n)).head(levels));
  }
  for (std::size_t j = 0; j + 1 < n_list.size(); ++j) {
    const double drift = (lows[j + 1] - lows[j]).cwiseAbs().maxCoeff();
    report.rows.push_back({n_list[j], n_list[j + 1], drift});
    if (!report.recommended && drift < 1e-10) report.recommended = n_list[j];
  }
  return report;
}

}  // namespace vibronic
