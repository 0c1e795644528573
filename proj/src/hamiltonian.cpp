#include "vibronic/hamiltonian.hpp"

#include <cmath>
#include <numbers>

#include "vibronic/errors.hpp"

namespace vibronic {

namespace {

HamiltonianMatrix assemble(TrapModel trap, const DriveParams& drive, int n_trunc,
                           const CouplingMatrix* coupling) {
  drive.validate();
  if (n_trunc < 2) throw DomainError("n_trunc must be >= 2");
  HamiltonianMatrix h{trap, drive, BasisMap{trap, n_trunc},
                      Eigen::MatrixXcd::Zero(2 * n_trunc, 2 * n_trunc)};
  const int n0 = trap.n_min();
  const double half_delta = 0.5 * drive.delta;
  for (int i = 0; i < n_trunc; ++i) {
    const double en = motional_energy(trap, n0 + i);
    h.mat(2 * i, 2 * i) = en + half_delta;
    h.mat(2 * i + 1, 2 * i + 1) = en - half_delta;
  }
  if (drive.omega_r > 0.0) {
    const double half_wr = 0.5 * drive.omega_r;
    for (int i = 0; i < n_trunc; ++i) {
      for (int j = 0; j < n_trunc; ++j) {
        const Complex k = coupling != nullptr ? coupling->entries(i, j)
                                              : coupling_exact(trap, n0 + i, n0 + j, drive.eta);
        h.mat(2 * i + 1, 2 * j) = half_wr * k;             // <e,i| V |g,j>
        h.mat(2 * j, 2 * i + 1) = half_wr * std::conj(k);  // Hermitian partner
      }
    }
  }
  return h;
}

}  // namespace

HamiltonianMatrix build_full_hamiltonian(TrapModel trap, const DriveParams& drive, int n_trunc) {
  return assemble(trap, drive, n_trunc, nullptr);
}

HamiltonianMatrix build_full_hamiltonian(TrapModel trap, const DriveParams& drive, int n_trunc,
                                         const CouplingMatrix& coupling) {
  if (coupling.trap != trap || coupling.eta != drive.eta || coupling.count() < n_trunc) {
    throw DomainError("coupling table does not match Hamiltonian parameters");
  }
  return assemble(trap, drive, n_trunc, &coupling);
}

HamiltonianMatrix build_bare_hamiltonian(TrapModel trap, double delta, int n_trunc) {
  return assemble(trap, DriveParams{0.0, delta, 0.0}, n_trunc, nullptr);
}

HamiltonianMatrix build_semidressed_hamiltonian(TrapModel trap, const DriveParams& drive,
                                                int n_trunc) {
  DriveParams sd = drive;
  sd.eta = 0.0;
  return assemble(trap, sd, n_trunc, nullptr);
}

SemidressedPair semidressed_spectrum(TrapModel trap, const DriveParams& drive, int n) {
  drive.validate();
  const double en = motional_energy(trap, n);
  const double omega = drive.omega();
  SemidressedPair pair;
  pair.plus = {n, +1, en + 0.5 * omega, Eigen::Vector2cd::Zero()};
  pair.minus = {n, -1, en - 0.5 * omega, Eigen::Vector2cd::Zero()};

  if (drive.omega_r == 0.0) {
    if (drive.delta == 0.0) {
      // Degenerate block; report the omega_r -> 0+ limit states.
      pair.degenerate = true;
      pair.plus.state << 1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2;
      pair.minus.state << -1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2;
      return pair;
    }
    // Continuity limit: the sign of delta selects the bare state.
    const bool plus_is_g = drive.delta > 0.0;
    pair.plus.state << (plus_is_g ? 1.0 : 0.0), (plus_is_g ? 0.0 : 1.0);
    pair.minus.state << (plus_is_g ? 0.0 : 1.0), (plus_is_g ? 1.0 : 0.0);
    return pair;
  }

  for (SemidressedLevel* level : {&pair.plus, &pair.minus}) {
    const double c = (drive.delta + level->sign * omega) / drive.omega_r;
    const double norm = std::sqrt(c * c + 1.0);
    level->state << c / norm, 1.0 / norm;
  }
  return pair;
}

Eigen::VectorXcd embed_semidressed(const SemidressedLevel& level, const BasisMap& basis) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.dim());
  v(basis.flat(Internal::g, level.n)) = level.state(0);
  v(basis.flat(Internal::e, level.n)) = level.state(1);
  return v;
}

Complex w_matrix_element(TrapModel trap, const DriveParams& drive, int s, int n, int s_prime,
                         int n_prime) {
  drive.validate();
  if (drive.omega_r <= 0.0) throw DomainError("w_matrix_element requires omega_r > 0");
  if (std::abs(s) != 1 || std::abs(s_prime) != 1) throw DomainError("signs must be +-1");
  const double omega = drive.omega();
  const auto [c, sv] = cos_sin_elements(trap, n, n_prime, drive.eta);
  const double c_shift = c - (n == n_prime ? 1.0 : 0.0);
  const double norm_s = 2.0 * omega * (omega + s * drive.delta) / (drive.omega_r * drive.omega_r);
  const double norm_sp =
      2.0 * omega * (omega + s_prime * drive.delta) / (drive.omega_r * drive.omega_r);
  Complex val = drive.delta * c_shift;
  if (s == s_prime) {
    val += static_cast<double>(s_prime) * omega * c_shift;
  } else {
    val += Complex{0.0, static_cast<double>(s_prime) * omega * sv};
  }
  return val / std::sqrt(norm_s * norm_sp);
}

}  // namespace vibronic
