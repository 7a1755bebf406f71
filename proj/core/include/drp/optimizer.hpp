#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "drp/matrix.hpp"
#include "drp/quadrature.hpp"

namespace drp {

// Three-point first-derivative weights, units 1/length. No algebraic relation
// is imposed among them; consistency is a measured property.
struct SpatialTriple {
  double beta_x;
  double delta_x;
  double epsilon_x;
};

enum class ConstraintKind {
  taylor_order,  // reproduce d/dx on monomials up to the given order
  antisymmetry,  // a_0 = 0 and a_m = -a_{-m}
};

struct StencilConstraint {
  ConstraintKind kind;
  int order = 0; // taylor_order only
};

// (2N+1)-point stencil in nondimensional form: coefficient a_m is h times the
// physical weight at offset m, stored for m = -N..N in ascending order.
struct StencilSpec {
  int half_width = 1;
  std::vector<double> coeffs;
  std::vector<StencilConstraint> constraints;
};

// Validates the width and that the constraint rows leave a free coefficient.
StencilSpec make_stencil(int half_width, std::vector<StencilConstraint> constraints = {});

StencilSpec stencil_from_triple(const SpatialTriple& t, double h);

// Fourier symbol of the stencil: lambda_bar * h at the band coordinate kappa.
// Ideal value is kappa itself.
std::complex<double> effective_wavenumber(const StencilSpec& s, double kappa);
std::complex<double> effective_wavenumber(const SpatialTriple& t, double h, double kappa);

// |kappa - lambda_bar h|^2 at one kappa.
double error_integrand(const StencilSpec& s, double kappa);

// Band integral of the squared symbol error, by Gauss-Legendre.
double integrated_error(const StencilSpec& s, const QuadratureSpec& quad);
double integrated_error(const SpatialTriple& t, double h, const QuadratureSpec& quad);

// Analytic antiderivative route for 3-point stencils; cross-check for the
// quadrature path.
double integrated_error_closed_form_3pt(const SpatialTriple& t, double h, double kappa_lo,
                                        double kappa_hi);

// Gradient of the band integral with respect to each coefficient a_m.
std::vector<double> stationarity_residual(const StencilSpec& s, const QuadratureSpec& quad);
std::vector<double> stationarity_residual(const SpatialTriple& t, double h,
                                          const QuadratureSpec& quad);

struct LinearSystem3 {
  Matrix lhs;              // 3x3, unknown order (beta_x, delta_x, epsilon_x)
  std::vector<double> rhs; // 3
};

// Fixed tabulated stationarity system whose solution is closed_form_triple.
// The rows are only consistent with that triple at h = 1; the h = 2 residual
// is nonzero and callers surface it rather than rescale.
LinearSystem3 closed_form_system(double h);

// beta_x = pi/(h (pi^2 - 8)), delta_x = 1/2 - 2/(h (pi^2 - 8)),
// epsilon_x = -2/(h (pi^2 - 8)).
SpatialTriple closed_form_triple(double h);

// Row residuals lhs * triple - rhs of closed_form_system(h).
std::vector<double> closed_form_system_residual(const SpatialTriple& t, double h);

// Minimizes the band integral over the free coefficients subject to the
// stencil's constraints, via the constrained normal equations.
StencilSpec least_squares_coefficients(const StencilSpec& s, const QuadratureSpec& quad);

// 3-point unconstrained minimizer, solved nondimensionally and scaled by 1/h.
SpatialTriple least_squares_triple(double h, const QuadratureSpec& quad);

} // namespace drp
