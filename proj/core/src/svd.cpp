#include "drp/svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "drp/errors.hpp"

namespace drp {

namespace {

constexpr std::size_t k_max_dim = 512;
constexpr int k_max_sweeps = 60;
constexpr double k_rotate_tol = 1.0e-14;

double column_dot(const Matrix& w, std::size_t p, std::size_t q) {
  double s = 0.0;
  for (std::size_t k = 0; k < w.rows(); ++k) s += w(k, p) * w(k, q);
  return s;
}

void rotate_columns(Matrix& w, std::size_t p, std::size_t q, double cs, double sn) {
  for (std::size_t k = 0; k < w.rows(); ++k) {
    const double wp = w(k, p);
    const double wq = w(k, q);
    w(k, p) = cs * wp - sn * wq;
    w(k, q) = sn * wp + cs * wq;
  }
}

// Appends orthonormal columns of `u` for slots [filled, m) by Gram-Schmidt
// over the standard basis; two orthogonalization passes keep the defect at
// machine level. Each slot takes the best remaining candidate: the max
// residual over standard vectors is at least 1/sqrt(m), so a fixed accept
// threshold would reject every candidate once enough columns are present.
void complete_basis(Matrix& u, std::size_t filled) {
  const std::size_t m = u.rows();
  std::vector<bool> used(m, false);
  std::vector<double> col(m), best_col(m);
  for (std::size_t slot = filled; slot < m; ++slot) {
    double best_norm = 0.0;
    std::size_t best_candidate = m;
    for (std::size_t candidate = 0; candidate < m; ++candidate) {
      if (used[candidate]) continue;
      std::fill(col.begin(), col.end(), 0.0);
      col[candidate] = 1.0;
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t j = 0; j < slot; ++j) {
          double d = 0.0;
          for (std::size_t k = 0; k < m; ++k) d += col[k] * u(k, j);
          for (std::size_t k = 0; k < m; ++k) col[k] -= d * u(k, j);
        }
      double norm = 0.0;
      for (double v : col) norm += v * v;
      norm = std::sqrt(norm);
      if (norm > best_norm) {
        best_norm = norm;
        best_col = col;
        best_candidate = candidate;
        if (norm > 0.7) break;
      }
    }
    if (best_candidate == m || best_norm <= 0.0)
      throw Error("svd_small: failed to complete orthogonal basis");
    used[best_candidate] = true;
    for (std::size_t k = 0; k < m; ++k) u(k, slot) = best_col[k] / best_norm;
  }
}

// Tall or square case (m >= n).
SVDResult svd_tall(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix w = a;
  Matrix v = Matrix::identity(n);

  for (int sweep = 0; sweep < k_max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t q = 1; q < n; ++q)
      for (std::size_t p = 0; p < q; ++p) {
        const double app = column_dot(w, p, p);
        const double aqq = column_dot(w, q, q);
        const double apq = column_dot(w, p, q);
        if (apq == 0.0 || app == 0.0 || aqq == 0.0) continue;
        const double rel = std::abs(apq) / std::sqrt(app * aqq);
        off = std::max(off, rel);
        if (rel <= k_rotate_tol) continue;
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t =
            (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        rotate_columns(w, p, q, cs, sn);
        rotate_columns(v, p, q, cs, sn);
      }
    if (off <= k_rotate_tol) break;
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(column_dot(w, j, j));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

  SVDResult r;
  r.sigma.resize(n);
  r.v = Matrix(n, n);
  r.u = Matrix(m, m);
  const double sigma_max = sigma[order[0]];
  const double negligible =
      sigma_max * static_cast<double>(std::max(m, n)) * std::numeric_limits<double>::epsilon();
  std::size_t filled = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    r.sigma[j] = sigma[src];
    for (std::size_t k = 0; k < n; ++k) r.v(k, j) = v(k, src);
    if (sigma[src] > negligible && sigma[src] > 0.0) {
      for (std::size_t k = 0; k < m; ++k) r.u(k, filled) = w(k, src) / sigma[src];
      ++filled;
    }
  }
  complete_basis(r.u, filled);
  return r;
}

} // namespace

SVDResult svd_small(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw SizingError("svd_small: empty matrix");
  if (a.rows() > k_max_dim || a.cols() > k_max_dim)
    throw SizingError("svd_small: dimension above 512");
  if (!a.all_finite()) throw NonFiniteError("svd_small: non-finite entry");

  if (a.rows() >= a.cols()) return svd_tall(a);
  SVDResult t = svd_tall(a.transposed());
  return SVDResult{std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

std::size_t numerical_rank(const std::vector<double>& sigma, double tol_factor) {
  if (sigma.empty()) return 0;
  const double cut = tol_factor * sigma.front();
  std::size_t r = 0;
  for (double s : sigma)
    if (s > cut && s > 0.0) ++r;
  return r;
}

} // namespace drp
