#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "drp/matrix.hpp"
#include "drp/optimizer.hpp"
#include "drp/scheme.hpp"
#include "drp/svd.hpp"

namespace drp {

struct InitialCondition;

inline constexpr double default_rank_tol = 1.0e-12;

// 2x2 representative block of M1^T M1. Coincides with the full Gram matrix
// exactly when n_x - 1 = 2; beyond that M1^T M1 is pentadiagonal and this
// block is an approximation whose gap is always reported.
Matrix gram_block_2x2(double beta, double delta, double epsilon);

// Eigenvalues of gram_block_2x2 by the closed radical formula
//   (2 beta^2 + delta^2 + epsilon^2 -/+ (delta + epsilon) *
//    sqrt(4 beta^2 + delta^2 + epsilon^2 - 2 delta epsilon)) / 2,
// returned in that -/+ order. They equal squared singular values of the
// assembled M1 only at block size 2.
std::pair<double, double> gram_block_eigenvalues(double beta, double delta, double epsilon);

// (alpha^2, gamma^2): eigenvalues of M2^T M2 at n_t = 2. For larger n_t the
// exact spectrum differs; see m2_spectrum_comparison.
std::pair<double, double> m2_gram_eigenvalues(double alpha, double gamma);

struct SpectrumComparison {
  std::vector<double> closed_form; // squared-value pair, padded view
  std::vector<double> exact_sq;    // squared singular values of the assembled matrix
  double max_gap;                  // multiset deviation between the two
};

SpectrumComparison m2_spectrum_comparison(double alpha, double gamma, std::size_t n_t);

// U1^T F V2 split at the numerical ranks of the two factors.
struct BlockSplit {
  Matrix f11, f12, f21, f22;
  std::size_t r1 = 0;
  std::size_t r2 = 0;
};

BlockSplit reduce(const Matrix& f, const SVDResult& svd1, const SVDResult& svd2,
                  double rank_tol = default_rank_tol);

// e12 = inv(diag(m1_diag)) * f12, e21 = f21 * inv(diag(m2_diag)).
struct OffBlockSolutions {
  Matrix e12;
  Matrix e21;
};

OffBlockSolutions off_block_solutions(const std::vector<double>& m1_diag,
                                      const std::vector<double>& m2_diag, const Matrix& f12,
                                      const Matrix& f21);

// Minimum-norm distribution of one constraint m1 * e + m2 * et = f between the
// two unknowns: e = m1 f / (m1^2 + m2^2), et = m2 f / (m1^2 + m2^2).
struct MinNormPair {
  double e;
  double e_tilde;
};

MinNormPair min_norm_split(double m1, double m2, double f);

// Entrywise min-norm solve of the coupled 11 block plus the two off blocks;
// f22 has no unknown attached, so its norm measures incompatibility.
struct ReducedSolution {
  Matrix e11;
  Matrix e11_tilde;
  Matrix e12;
  Matrix e21;
  double f22_norm = 0.0;
};

ReducedSolution solve_reduced(const BlockSplit& split, const SVDResult& svd1,
                              const SVDResult& svd2);

// Both evaluations of the coefficient-norm identities. The closed forms
//   |M1|^2 = (n_x - 1)/2 * (2 beta^2 + delta^2 + epsilon^2)
//   |M2|^2 = n_t/2 * (alpha^2 + gamma^2)
// differ from the assembled Frobenius sums by boundary terms; both values and
// their gap are always reported, and odd sizes flag the parity mismatch the
// /2 multiplicities assume away.
struct NormIdentityReport {
  double m1_closed_form_sq;
  double m1_exact_sq;
  double m1_gap;
  double m2_closed_form_sq;
  double m2_exact_sq;
  double m2_gap;
  bool parity_mismatch;
};

NormIdentityReport frobenius_identities(const EffectiveWeights& e, std::size_t n_x,
                                        std::size_t n_t);

struct BoundReport {
  double u_exact_norm;
  double m0_norm;
  double space_factor; // sqrt((n_x-1)/2) * sqrt(2 beta^2 + delta^2 + epsilon^2)
  double time_factor;  // sqrt(n_t/2) * sqrt(alpha^2 + gamma^2)
  double bound;        // sqrt(n_t (n_x-1)) * (u_norm * (space + time) + m0_norm)
  bool has_measured = false;
  double measured_f11 = 0.0;
  bool holds = true;
};

BoundReport error_bound(double u_exact_norm, double m0_norm, const EffectiveWeights& e,
                        std::size_t n_x, std::size_t n_t);

// f1 = sqrt(2 beta^2 + delta^2 + epsilon^2) on effective weights,
// f2 = sqrt(alpha_x^2 + gamma_x^2) on the split, f3 = |M0|.
struct Objectives {
  double f1;
  double f2;
  double f3;
};

Objectives objectives(const SchemeCoefficients& coeffs, double m0_norm);

// g substitutes a fixed spatial optimum: g1 = sqrt((beta_opt + beta_t)^2 +
// (delta_opt + delta_t)^2 + (epsilon_opt + epsilon_t)^2) with unit weight on
// the beta term (f1 carries 2), g2 = sqrt(alpha_x^2 + gamma_x^2), g3 = |M0|.
struct GObjectives {
  double g1;
  double g2;
  double g3;
};

GObjectives g_objectives(const SchemeCoefficients& coeffs, const SpatialTriple& fixed_triple,
                         double m0_norm);

// Search over (beta_t, delta_t, epsilon_t, alpha_x, gamma_x): iterated grid
// refinement of w1 g1^2 + w2 g2^2 (+ w3 g3^2 when an M0-norm callback is
// given) inside a box; any dimension can be pinned.
struct GSearchSpec {
  SpatialTriple fixed_triple{0.0, 0.0, 0.0};
  std::array<double, 5> lo{};
  std::array<double, 5> hi{};
  std::array<bool, 5> pinned{};
  std::array<double, 5> pinned_value{};
  double w1 = 1.0;
  double w2 = 1.0;
  double w3 = 0.0;
  std::size_t grid_points = 11;
  std::size_t refinements = 24;
  std::function<double(const SchemeCoefficients&)> m0_norm_fn;
};

inline constexpr std::array<const char*, 5> g_search_dimension_names = {
    "beta_t", "delta_t", "epsilon_t", "alpha_x", "gamma_x"};

struct GSample {
  std::array<double, 5> params;
  double g1;
  double g2;
  double g3;
};

struct GSearchResult {
  std::array<double, 5> best;
  double g1;
  double g2;
  double g3;
  double objective;
  std::vector<GSample> samples; // first (coarsest) pass only
};

GSearchResult minimize_g(const GSearchSpec& spec);

SchemeCoefficients g_candidate(const GSearchSpec& spec, const std::array<double, 5>& params);

// Full reduction pipeline for one scheme instance on one grid.
struct AnalysisReport {
  std::size_t n_x = 0;
  std::size_t n_t = 0;
  double u_exact_norm = 0.0;
  double m0_norm = 0.0;
  double f_norm = 0.0;
  double f_tilde_norm = 0.0;
  std::size_t rank1 = 0;
  std::size_t rank2 = 0;
  double f11_norm = 0.0;
  double f12_norm = 0.0;
  double f21_norm = 0.0;
  double f22_norm = 0.0;
  double max_supported_residual = 0.0; // time-stepped U, columns 1..n_t-1
  std::vector<double> m1_singular_values;
  std::vector<double> m2_singular_values;
  std::pair<double, double> m1_gram_eigenvalues_closed{0.0, 0.0};
  std::pair<double, double> m2_gram_eigenvalues_closed{0.0, 0.0};
  double m1_spectrum_gap = 0.0; // closed pair vs exact squared values
  double m2_spectrum_gap = 0.0;
  NormIdentityReport norm_identities{};
  BoundReport bound{};
  Objectives f_objectives{};
  GObjectives g{};
  double consistency = 0.0;
  std::vector<std::string> flags;
};

AnalysisReport analyze_instance(const GridSpec& grid, const SchemeCoefficients& coeffs,
                                const InitialCondition& ic, double rank_tol = default_rank_tol);

} // namespace drp
