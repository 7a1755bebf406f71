#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "drp/matrix.hpp"

namespace drp::testing {

// Reference spectrum for symmetric matrices by classic two-sided Jacobi
// rotations. Deliberately separate from the library's one-sided SVD so the
// two can disagree: singular values are checked against the square roots of
// these eigenvalues of A^T A.
inline std::vector<double> symmetric_eigenvalues(Matrix a) {
  const std::size_t n = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off < 1.0e-13) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1.0e-300) continue;
        const double zeta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t =
            (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

// sqrt(eig(A^T A)), nonincreasing. Zero-clamps tiny negatives from roundoff.
inline std::vector<double> singular_values_oracle(const Matrix& a) {
  Matrix ata = multiply(a.transposed(), a);
  std::vector<double> eig = symmetric_eigenvalues(ata);
  for (double& e : eig) e = std::sqrt(std::max(e, 0.0));
  return eig;
}

} // namespace drp::testing
