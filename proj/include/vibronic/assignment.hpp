#pragma once

#include <vector>

#include <Eigen/Dense>

namespace vibronic {

// Maximum-total-weight perfect matching on a square weight matrix (rows: previous
// branches, cols: new eigenvectors).  Returns perm with perm[row] = col.
// Jonker-Volgenant style shortest augmenting paths, O(n^3), deterministic.
std::vector<int> max_weight_assignment(const Eigen::MatrixXd& weight);

}  // namespace vibronic
