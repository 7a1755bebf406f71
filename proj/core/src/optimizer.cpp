#include "drp/optimizer.hpp"

#include <cmath>
#include <numbers>

#include "drp/errors.hpp"

namespace drp {

namespace {

std::size_t constraint_row_count(int half_width, const std::vector<StencilConstraint>& cs) {
  std::size_t rows = 0;
  for (const StencilConstraint& c : cs) {
    if (c.kind == ConstraintKind::taylor_order) {
      if (c.order < 0) throw ValidationError("stencil constraint: negative order");
      rows += static_cast<std::size_t>(c.order) + 1;
    } else {
      rows += static_cast<std::size_t>(half_width) + 1;
    }
  }
  return rows;
}

// Constraint rows C a = d over coefficients ordered m = -N..N.
void append_constraint_rows(const StencilSpec& s, Matrix& c_rows, std::vector<double>& d) {
  const int n = s.half_width;
  std::size_t row = 0;
  for (const StencilConstraint& con : s.constraints) {
    if (con.kind == ConstraintKind::taylor_order) {
      for (int q = 0; q <= con.order; ++q, ++row) {
        for (int m = -n; m <= n; ++m)
          c_rows(row, static_cast<std::size_t>(m + n)) = std::pow(static_cast<double>(m), q);
        d[row] = (q == 1) ? 1.0 : 0.0;
      }
    } else {
      c_rows(row, static_cast<std::size_t>(n)) = 1.0;
      d[row] = 0.0;
      ++row;
      for (int m = 1; m <= n; ++m, ++row) {
        c_rows(row, static_cast<std::size_t>(n + m)) = 1.0;
        c_rows(row, static_cast<std::size_t>(n - m)) = 1.0;
        d[row] = 0.0;
      }
    }
  }
}

struct SymbolParts {
  double sin_sum; // sum a_m sin(m kappa)
  double cos_sum; // sum a_m cos(m kappa)
};

SymbolParts symbol_parts(const StencilSpec& s, double kappa) {
  const int n = s.half_width;
  SymbolParts p{0.0, 0.0};
  for (int m = -n; m <= n; ++m) {
    const double a = s.coeffs[static_cast<std::size_t>(m + n)];
    p.sin_sum += a * std::sin(m * kappa);
    p.cos_sum += a * std::cos(m * kappa);
  }
  return p;
}

} // namespace

StencilSpec make_stencil(int half_width, std::vector<StencilConstraint> constraints) {
  if (half_width < 1) throw ValidationError("stencil: half width must be at least 1");
  const std::size_t width = static_cast<std::size_t>(2 * half_width + 1);
  if (constraint_row_count(half_width, constraints) >= width)
    throw ValidationError("stencil: constraints leave no free coefficient");
  StencilSpec s;
  s.half_width = half_width;
  s.coeffs.assign(width, 0.0);
  s.constraints = std::move(constraints);
  return s;
}

StencilSpec stencil_from_triple(const SpatialTriple& t, double h) {
  if (!(h > 0.0)) throw ValidationError("stencil_from_triple: h must be positive");
  StencilSpec s = make_stencil(1);
  s.coeffs[0] = h * t.epsilon_x;
  s.coeffs[1] = h * t.beta_x;
  s.coeffs[2] = h * t.delta_x;
  return s;
}

std::complex<double> effective_wavenumber(const StencilSpec& s, double kappa) {
  const SymbolParts p = symbol_parts(s, kappa);
  return {p.sin_sum, -p.cos_sum};
}

std::complex<double> effective_wavenumber(const SpatialTriple& t, double h, double kappa) {
  return effective_wavenumber(stencil_from_triple(t, h), kappa);
}

double error_integrand(const StencilSpec& s, double kappa) {
  const SymbolParts p = symbol_parts(s, kappa);
  const double re = kappa - p.sin_sum;
  return re * re + p.cos_sum * p.cos_sum;
}

double integrated_error(const StencilSpec& s, const QuadratureSpec& quad) {
  return integrate([&](double kappa) { return error_integrand(s, kappa); }, quad);
}

double integrated_error(const SpatialTriple& t, double h, const QuadratureSpec& quad) {
  return integrated_error(stencil_from_triple(t, h), quad);
}

double integrated_error_closed_form_3pt(const SpatialTriple& t, double h, double kappa_lo,
                                        double kappa_hi) {
  if (!(h > 0.0)) throw ValidationError("closed form error: h must be positive");
  const double a0 = h * t.beta_x;
  const double p = h * t.delta_x - h * t.epsilon_x; // odd part
  const double s = h * t.delta_x + h * t.epsilon_x; // even part
  const auto antiderivative = [&](double k) {
    return k * k * k / 3.0 - 2.0 * p * (std::sin(k) - k * std::cos(k)) +
           p * p * (k / 2.0 - std::sin(2.0 * k) / 4.0) + a0 * a0 * k +
           2.0 * a0 * s * std::sin(k) + s * s * (k / 2.0 + std::sin(2.0 * k) / 4.0);
  };
  return antiderivative(kappa_hi) - antiderivative(kappa_lo);
}

std::vector<double> stationarity_residual(const StencilSpec& s, const QuadratureSpec& quad) {
  const int n = s.half_width;
  const GaussLegendre gl = gauss_legendre(quad.nodes, quad.kappa_lo, quad.kappa_hi);
  std::vector<double> g(static_cast<std::size_t>(2 * n + 1), 0.0);
  for (std::size_t i = 0; i < gl.x.size(); ++i) {
    const double kappa = gl.x[i];
    const SymbolParts parts = symbol_parts(s, kappa);
    const double re = kappa - parts.sin_sum;
    for (int m = -n; m <= n; ++m)
      g[static_cast<std::size_t>(m + n)] +=
          gl.w[i] * 2.0 * (-re * std::sin(m * kappa) + parts.cos_sum * std::cos(m * kappa));
  }
  return g;
}

std::vector<double> stationarity_residual(const SpatialTriple& t, double h,
                                          const QuadratureSpec& quad) {
  return stationarity_residual(stencil_from_triple(t, h), quad);
}

LinearSystem3 closed_form_system(double h) {
  if (!(h > 0.0)) throw ValidationError("closed_form_system: h must be positive");
  const double pi = std::numbers::pi;
  LinearSystem3 sys;
  sys.lhs = Matrix(3, 3);
  sys.lhs(0, 0) = 2.0 * pi * h;
  sys.lhs(0, 1) = 4.0 * h;
  sys.lhs(0, 2) = 4.0 * h;
  sys.lhs(1, 0) = 4.0 * h;
  sys.lhs(1, 1) = 2.0 * pi;
  sys.lhs(1, 2) = 0.0;
  sys.lhs(2, 0) = 4.0 * h;
  sys.lhs(2, 1) = 0.0;
  sys.lhs(2, 2) = 2.0 * pi * h;
  sys.rhs = {4.0, pi, 0.0};
  return sys;
}

SpatialTriple closed_form_triple(double h) {
  if (!(h > 0.0)) throw ValidationError("closed_form_triple: h must be positive");
  const double pi = std::numbers::pi;
  const double den = h * (pi * pi - 8.0);
  return SpatialTriple{pi / den, 0.5 - 2.0 / den, -2.0 / den};
}

std::vector<double> closed_form_system_residual(const SpatialTriple& t, double h) {
  const LinearSystem3 sys = closed_form_system(h);
  const double x[3] = {t.beta_x, t.delta_x, t.epsilon_x};
  std::vector<double> r(3, 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    double s = -sys.rhs[i];
    for (std::size_t j = 0; j < 3; ++j) s += sys.lhs(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

StencilSpec least_squares_coefficients(const StencilSpec& s, const QuadratureSpec& quad) {
  const int n = s.half_width;
  const std::size_t width = static_cast<std::size_t>(2 * n + 1);
  const std::size_t m_rows = constraint_row_count(n, s.constraints);
  const GaussLegendre gl = gauss_legendre(quad.nodes, quad.kappa_lo, quad.kappa_hi);

  // Normal equations of the quadratic band integral:
  //   G_{mm'} = int cos((m - m') kappa), b_m = int kappa sin(m kappa).
  Matrix g(width, width);
  std::vector<double> b(width, 0.0);
  for (std::size_t i = 0; i < gl.x.size(); ++i) {
    const double kappa = gl.x[i];
    const double w = gl.w[i];
    for (int m = -n; m <= n; ++m) {
      b[static_cast<std::size_t>(m + n)] += w * kappa * std::sin(m * kappa);
      for (int mp = -n; mp <= n; ++mp)
        g(static_cast<std::size_t>(m + n), static_cast<std::size_t>(mp + n)) +=
            w * std::cos((m - mp) * kappa);
    }
  }

  const std::size_t dim = width + m_rows;
  Matrix kkt(dim, dim);
  std::vector<double> rhs(dim, 0.0);
  for (std::size_t i = 0; i < width; ++i) {
    rhs[i] = 2.0 * b[i];
    for (std::size_t j = 0; j < width; ++j) kkt(i, j) = 2.0 * g(i, j);
  }
  if (m_rows > 0) {
    Matrix c_rows(m_rows, width);
    std::vector<double> d(m_rows, 0.0);
    append_constraint_rows(s, c_rows, d);
    for (std::size_t r = 0; r < m_rows; ++r) {
      rhs[width + r] = d[r];
      for (std::size_t j = 0; j < width; ++j) {
        kkt(j, width + r) = c_rows(r, j);
        kkt(width + r, j) = c_rows(r, j);
      }
    }
  }

  std::vector<double> solution;
  try {
    solution = solve_linear(kkt, rhs);
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError(
        "least_squares_coefficients: singular normal equations (degenerate band or dependent "
        "constraints)");
  }
  StencilSpec out = s;
  out.coeffs.assign(solution.begin(), solution.begin() + static_cast<std::ptrdiff_t>(width));
  return out;
}

SpatialTriple least_squares_triple(double h, const QuadratureSpec& quad) {
  if (!(h > 0.0)) throw ValidationError("least_squares_triple: h must be positive");
  const StencilSpec s = least_squares_coefficients(make_stencil(1), quad);
  return SpatialTriple{s.coeffs[1] / h, s.coeffs[2] / h, s.coeffs[0] / h};
}

} // namespace drp
