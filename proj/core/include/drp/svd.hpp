#pragma once

#include <vector>

#include "drp/matrix.hpp"

namespace drp {

// A = U * diag(sigma) * V^T with U (m x m) and V (n x n) orthogonal and sigma
// the min(m, n) singular values in nonincreasing order.
struct SVDResult {
  Matrix u;
  std::vector<double> sigma;
  Matrix v;
};

// One-sided Jacobi decomposition for dense matrices up to 512 in each
// direction. Rank-deficient and rectangular inputs get their orthogonal
// factors completed by Gram-Schmidt.
SVDResult svd_small(const Matrix& a);

// Count of singular values above tol_factor * sigma_max.
std::size_t numerical_rank(const std::vector<double>& sigma, double tol_factor);

} // namespace drp
