#include "vibronic/assignment.hpp"

#include <limits>

#include "vibronic/errors.hpp"

namespace vibronic {

// Minimize total cost with cost = -weight; classic dual-variable shortest
// augmenting path formulation (Jonker & Volgenant).
std::vector<int> max_weight_assignment(const Eigen::MatrixXd& weight) {
  const int n = static_cast<int>(weight.rows());
  if (weight.cols() != n || n == 0) throw DomainError("assignment needs a nonempty square matrix");

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based internal arrays; u/v are the dual potentials.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match_col(n + 1, 0);  // match_col[col] = row
  std::vector<int> way(n + 1, 0);

  for (int row = 1; row <= n; ++row) {
    match_col[0] = row;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match_col[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = -weight(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match_col[j0] != 0);
    do {
      const int j1 = way[j0];
      match_col[j0] = match_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> perm(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (match_col[j] > 0) perm[match_col[j] - 1] = j - 1;
  }
  return perm;
}

}  // namespace vibronic
