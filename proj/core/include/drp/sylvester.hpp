#pragma once

#include <array>
#include <cstddef>

#include "drp/matrix.hpp"
#include "drp/scheme.hpp"

namespace drp {

// Matrix form of the whole space-time scheme: M1 U + U M2 + L(U) = M0 over the
// interior solution matrix U ((n_x - 1) x n_t). M0 is nonzero only in its
// first column, first row, and last row. Column n_t of the equation drops the
// u^{n_t + 1} stencil terms (no row of M2 or L reaches them); equivalence
// checks therefore cover columns 1..n_t-1 and reports flag the last column as
// truncated.
struct SylvesterSystem {
  Matrix m1; // (n_x-1)^2, tridiagonal: diag beta, super delta, sub epsilon
  Matrix m2; // n_t^2: zero diagonal, super gamma, sub alpha
  Matrix m0; // (n_x-1) x n_t, boundary and initial contributions
  double zeta = 0.0, eta = 0.0, theta = 0.0, vartheta = 0.0;
  std::size_t n_x = 0;
  std::size_t n_t = 0;
};

// One scheme term: weight * u_{i+di}^{n+dn}.
struct StencilTerm {
  double weight;
  int di;
  int dn;
};

std::array<StencilTerm, 9> stencil_terms(const EffectiveWeights& e);

Matrix assemble_m1(double beta, double delta, double epsilon, std::size_t n_x);
Matrix assemble_m2(double alpha, double gamma, std::size_t n_t);
Matrix assemble_m0(const SchemeCoefficients& coeffs, const BoundaryData& boundary,
                   const GridSpec& grid);

SylvesterSystem assemble_system(const SchemeCoefficients& coeffs, const BoundaryData& boundary,
                                const GridSpec& grid);

// zeta L1 + eta L2 + theta L3 + vartheta L4 with the four shifted, zero-padded
// patterns. Needs at least 3x3 when any weight is nonzero.
Matrix apply_L(const Matrix& u, double zeta, double eta, double theta, double vartheta);

// M1 U + U M2 + L(U) - M0.
Matrix scheme_residual(const Matrix& u, const SylvesterSystem& sys);

// Same contraction applied to the sampled exact solution; the result is the
// global truncation-error matrix F.
Matrix exact_residual(const Matrix& u_exact, const SylvesterSystem& sys);

// E = U - U_exact.
Matrix error_matrix(const Matrix& u, const Matrix& u_exact);

// Largest |entry| over every column but the truncated last one.
double max_abs_supported_columns(const Matrix& f);

} // namespace drp
