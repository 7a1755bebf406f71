#include "drp/sylvester.hpp"

#include <cmath>

#include "drp/errors.hpp"

namespace drp {

std::array<StencilTerm, 9> stencil_terms(const EffectiveWeights& e) {
  return {{{e.alpha, 0, 1},
           {e.beta, 0, 0},
           {e.gamma, 0, -1},
           {e.delta, 1, 0},
           {e.epsilon, -1, 0},
           {e.zeta, 1, 1},
           {e.eta, -1, -1},
           {e.theta, -1, 1},
           {e.vartheta, 1, -1}}};
}

Matrix assemble_m1(double beta, double delta, double epsilon, std::size_t n_x) {
  if (n_x < 3) throw SizingError("assemble_m1: n_x must be at least 3");
  const std::size_t n = n_x - 1;
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = beta;
    if (i + 1 < n) m(i, i + 1) = delta;
    if (i > 0) m(i, i - 1) = epsilon;
  }
  return m;
}

Matrix assemble_m2(double alpha, double gamma, std::size_t n_t) {
  if (n_t < 2) throw SizingError("assemble_m2: n_t must be at least 2");
  Matrix m(n_t, n_t);
  for (std::size_t k = 0; k < n_t; ++k) {
    if (k + 1 < n_t) m(k, k + 1) = gamma;
    if (k > 0) m(k, k - 1) = alpha;
  }
  return m;
}

Matrix assemble_m0(const SchemeCoefficients& coeffs, const BoundaryData& boundary,
                   const GridSpec& grid) {
  validate_boundary(boundary, grid);
  const EffectiveWeights e = effective(coeffs);
  const auto terms = stencil_terms(e);
  const std::size_t n_x = grid.n_x;
  const std::size_t n_t = grid.n_t;
  Matrix m0(n_x - 1, n_t);
  // Walk the scheme at each interior node: stencil values that live inside U
  // stay on the left side, values past level n_t are dropped with the
  // truncated final column, and known boundary values move to M0.
  for (std::size_t i = 1; i <= n_x - 1; ++i)
    for (std::size_t n = 1; n <= n_t; ++n)
      for (const StencilTerm& term : terms) {
        if (term.weight == 0.0) continue;
        const long ii = static_cast<long>(i) + term.di;
        const long nn = static_cast<long>(n) + term.dn;
        const bool interior =
            ii >= 1 && ii <= static_cast<long>(n_x) - 1 && nn >= 1 && nn <= static_cast<long>(n_t);
        if (interior) continue;
        if (nn > static_cast<long>(n_t)) continue;
        double value;
        if (nn == 0)
          value = boundary.initial[static_cast<std::size_t>(ii)];
        else if (ii == 0)
          value = boundary.left[static_cast<std::size_t>(nn)];
        else
          value = boundary.right[static_cast<std::size_t>(nn)];
        m0(i - 1, n - 1) -= term.weight * value;
      }
  return m0;
}

SylvesterSystem assemble_system(const SchemeCoefficients& coeffs, const BoundaryData& boundary,
                                const GridSpec& grid) {
  const EffectiveWeights e = effective(coeffs);
  SylvesterSystem sys;
  sys.m1 = assemble_m1(e.beta, e.delta, e.epsilon, grid.n_x);
  sys.m2 = assemble_m2(e.alpha, e.gamma, grid.n_t);
  sys.m0 = assemble_m0(coeffs, boundary, grid);
  sys.zeta = e.zeta;
  sys.eta = e.eta;
  sys.theta = e.theta;
  sys.vartheta = e.vartheta;
  sys.n_x = grid.n_x;
  sys.n_t = grid.n_t;
  return sys;
}

Matrix apply_L(const Matrix& u, double zeta, double eta, double theta, double vartheta) {
  const std::size_t rows = u.rows();
  const std::size_t cols = u.cols();
  Matrix out(rows, cols);
  if (zeta == 0.0 && eta == 0.0 && theta == 0.0 && vartheta == 0.0) return out;
  if (rows < 3 || cols < 3)
    throw DimensionError("apply_L: shifted blocks need at least a 3x3 matrix");
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      double v = 0.0;
      if (r + 1 < rows && c + 1 < cols) v += zeta * u(r + 1, c + 1);
      if (r >= 1 && c >= 1) v += eta * u(r - 1, c - 1);
      if (r >= 1 && c + 1 < cols) v += theta * u(r - 1, c + 1);
      if (r + 1 < rows && c >= 1) v += vartheta * u(r + 1, c - 1);
      out(r, c) = v;
    }
  return out;
}

Matrix scheme_residual(const Matrix& u, const SylvesterSystem& sys) {
  if (u.rows() != sys.m0.rows() || u.cols() != sys.m0.cols())
    throw DimensionError("scheme_residual: solution shape does not match the system");
  Matrix r = multiply(sys.m1, u);
  r += multiply(u, sys.m2);
  r += apply_L(u, sys.zeta, sys.eta, sys.theta, sys.vartheta);
  r -= sys.m0;
  return r;
}

Matrix exact_residual(const Matrix& u_exact, const SylvesterSystem& sys) {
  return scheme_residual(u_exact, sys);
}

Matrix error_matrix(const Matrix& u, const Matrix& u_exact) {
  if (u.rows() != u_exact.rows() || u.cols() != u_exact.cols())
    throw DimensionError("error_matrix: shape mismatch");
  return u - u_exact;
}

double max_abs_supported_columns(const Matrix& f) {
  if (f.cols() < 2) return 0.0;
  double m = 0.0;
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j + 1 < f.cols(); ++j) m = std::max(m, std::abs(f(i, j)));
  return m;
}

} // namespace drp
