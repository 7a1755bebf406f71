#include "drp/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "drp/errors.hpp"

namespace drp {

QuadratureSpec default_band(std::size_t nodes) {
  return make_quadrature(-std::numbers::pi / 2.0, std::numbers::pi / 2.0, nodes);
}

QuadratureSpec make_quadrature(double kappa_lo, double kappa_hi, std::size_t nodes) {
  if (!(kappa_lo < kappa_hi))
    throw ValidationError("quadrature band: kappa_lo must be below kappa_hi");
  if (nodes < 16 || nodes % 2 != 0)
    throw ValidationError("quadrature nodes: need an even count of at least 16");
  return QuadratureSpec{kappa_lo, kappa_hi, nodes};
}

// Newton iteration on the Legendre recurrence; roots seeded by the Chebyshev
// approximation and mirrored in pairs.
GaussLegendre gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) throw ValidationError("gauss_legendre: zero nodes");
  GaussLegendre gl;
  gl.x.resize(n);
  gl.w.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 -
                           (static_cast<double>(k) - 1.0) * p0) /
                          static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1.0e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.x[i] = -x;
    gl.w[i] = w;
    gl.x[n - 1 - i] = x;
    gl.w[n - 1 - i] = w;
  }
  const double mid = 0.5 * (b + a);
  const double span = 0.5 * (b - a);
  for (std::size_t i = 0; i < n; ++i) {
    gl.x[i] = mid + span * gl.x[i];
    gl.w[i] *= span;
  }
  return gl;
}

} // namespace drp
