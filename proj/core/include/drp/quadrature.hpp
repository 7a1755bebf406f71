#pragma once

#include <cstddef>
#include <vector>

namespace drp {

// Wavenumber band and node count for the spectral-error integrals.
// Band endpoints are in radians (kappa = omega * h).
struct QuadratureSpec {
  double kappa_lo;
  double kappa_hi;
  std::size_t nodes;
};

// Default band: wavelengths longer than four cells.
QuadratureSpec default_band(std::size_t nodes = 64);

// Validates lo < hi, nodes >= 16 and even.
QuadratureSpec make_quadrature(double kappa_lo, double kappa_hi, std::size_t nodes);

struct GaussLegendre {
  std::vector<double> x; // nodes, ascending
  std::vector<double> w; // weights, positive
};

// Nodes and weights on [a, b]; exact for polynomials of degree 2n-1.
GaussLegendre gauss_legendre(std::size_t n, double a, double b);

template <class F>
double integrate(const F& f, const QuadratureSpec& spec) {
  const GaussLegendre gl = gauss_legendre(spec.nodes, spec.kappa_lo, spec.kappa_hi);
  double s = 0.0;
  for (std::size_t i = 0; i < gl.x.size(); ++i) s += gl.w[i] * f(gl.x[i]);
  return s;
}

} // namespace drp
