#pragma once

#include <vector>

#include <Eigen/Dense>

namespace chartforge {

/// Minimal-cost assignment (Hungarian method) on a rectangular matrix.
/// Returns, for each row, the assigned column or -1 when the matrix has more
/// rows than columns and the row is left over.
std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost);

/// Same, maximizing total similarity instead.
std::vector<int> max_similarity_assignment(const Eigen::MatrixXd& similarity);

}  // namespace chartforge
