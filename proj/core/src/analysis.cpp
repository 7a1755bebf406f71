#include "drp/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "drp/errors.hpp"
#include "drp/parallel.hpp"
#include "drp/simulate.hpp"
#include "drp/sylvester.hpp"

namespace drp {

namespace {

double norm_of(const Matrix& m) { return m.empty() ? 0.0 : m.frobenius_norm(); }

// Multiset gap between two squared-spectrum listings, both sorted descending
// and padded with zeros to a common length.
double multiset_gap(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0.0);
  b.resize(n, 0.0);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  double gap = 0.0;
  for (std::size_t i = 0; i < n; ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

} // namespace

Matrix gram_block_2x2(double beta, double delta, double epsilon) {
  Matrix g(2, 2);
  g(0, 0) = beta * beta + delta * delta;
  g(0, 1) = beta * (delta + epsilon);
  g(1, 0) = beta * (delta + epsilon);
  g(1, 1) = epsilon * epsilon + beta * beta;
  return g;
}

std::pair<double, double> gram_block_eigenvalues(double beta, double delta, double epsilon) {
  const double trace_part = 2.0 * beta * beta + delta * delta + epsilon * epsilon;
  // Radicand equals 4 beta^2 + (delta - epsilon)^2, never negative.
  const double radicand =
      4.0 * beta * beta + delta * delta + epsilon * epsilon - 2.0 * delta * epsilon;
  const double root = (delta + epsilon) * std::sqrt(radicand);
  return {0.5 * (trace_part - root), 0.5 * (trace_part + root)};
}

std::pair<double, double> m2_gram_eigenvalues(double alpha, double gamma) {
  return {alpha * alpha, gamma * gamma};
}

SpectrumComparison m2_spectrum_comparison(double alpha, double gamma, std::size_t n_t) {
  SpectrumComparison cmp;
  const std::pair<double, double> closed = m2_gram_eigenvalues(alpha, gamma);
  cmp.closed_form = {closed.first, closed.second};
  const SVDResult svd = svd_small(assemble_m2(alpha, gamma, n_t));
  cmp.exact_sq.reserve(svd.sigma.size());
  for (double s : svd.sigma) cmp.exact_sq.push_back(s * s);
  cmp.max_gap = multiset_gap(cmp.closed_form, cmp.exact_sq);
  return cmp;
}

BlockSplit reduce(const Matrix& f, const SVDResult& svd1, const SVDResult& svd2,
                  double rank_tol) {
  if (svd1.u.rows() != f.rows() || svd2.v.rows() != f.cols())
    throw DimensionError("reduce: factor shapes do not match F");
  const Matrix f_tilde = multiply(multiply(svd1.u.transposed(), f), svd2.v);
  BlockSplit split;
  split.r1 = numerical_rank(svd1.sigma, rank_tol);
  split.r2 = numerical_rank(svd2.sigma, rank_tol);
  const std::size_t rows = f_tilde.rows();
  const std::size_t cols = f_tilde.cols();
  split.f11 = f_tilde.block(0, 0, split.r1, split.r2);
  split.f12 = f_tilde.block(0, split.r2, split.r1, cols - split.r2);
  split.f21 = f_tilde.block(split.r1, 0, rows - split.r1, split.r2);
  split.f22 = f_tilde.block(split.r1, split.r2, rows - split.r1, cols - split.r2);
  return split;
}

OffBlockSolutions off_block_solutions(const std::vector<double>& m1_diag,
                                      const std::vector<double>& m2_diag, const Matrix& f12,
                                      const Matrix& f21) {
  if (m1_diag.size() != f12.rows()) throw DimensionError("off blocks: diag/F12 shape mismatch");
  if (m2_diag.size() != f21.cols()) throw DimensionError("off blocks: diag/F21 shape mismatch");
  for (double d : m1_diag)
    if (d == 0.0) throw RankError("off blocks: zero retained value on the left diagonal");
  for (double d : m2_diag)
    if (d == 0.0) throw RankError("off blocks: zero retained value on the right diagonal");
  OffBlockSolutions out;
  out.e12 = f12;
  for (std::size_t i = 0; i < f12.rows(); ++i)
    for (std::size_t j = 0; j < f12.cols(); ++j) out.e12(i, j) /= m1_diag[i];
  out.e21 = f21;
  for (std::size_t i = 0; i < f21.rows(); ++i)
    for (std::size_t j = 0; j < f21.cols(); ++j) out.e21(i, j) /= m2_diag[j];
  return out;
}

MinNormPair min_norm_split(double m1, double m2, double f) {
  const double denom = m1 * m1 + m2 * m2;
  if (denom == 0.0) {
    if (f == 0.0) return {0.0, 0.0};
    throw InfeasibleError("min_norm_split: both multipliers vanish with a nonzero right side");
  }
  return {m1 * f / denom, m2 * f / denom};
}

ReducedSolution solve_reduced(const BlockSplit& split, const SVDResult& svd1,
                              const SVDResult& svd2) {
  ReducedSolution sol;
  sol.e11 = Matrix(split.r1, split.r2);
  sol.e11_tilde = Matrix(split.r1, split.r2);
  for (std::size_t i = 0; i < split.r1; ++i)
    for (std::size_t j = 0; j < split.r2; ++j) {
      const MinNormPair p = min_norm_split(svd1.sigma[i], svd2.sigma[j], split.f11(i, j));
      sol.e11(i, j) = p.e;
      sol.e11_tilde(i, j) = p.e_tilde;
    }
  const std::vector<double> d1(svd1.sigma.begin(),
                               svd1.sigma.begin() + static_cast<std::ptrdiff_t>(split.r1));
  const std::vector<double> d2(svd2.sigma.begin(),
                               svd2.sigma.begin() + static_cast<std::ptrdiff_t>(split.r2));
  const OffBlockSolutions off = off_block_solutions(d1, d2, split.f12, split.f21);
  sol.e12 = off.e12;
  sol.e21 = off.e21;
  sol.f22_norm = norm_of(split.f22);
  return sol;
}

NormIdentityReport frobenius_identities(const EffectiveWeights& e, std::size_t n_x,
                                        std::size_t n_t) {
  if (n_x < 3 || n_t < 2) throw SizingError("frobenius_identities: grid too small");
  NormIdentityReport r;
  const double nx1 = static_cast<double>(n_x - 1);
  const double nt = static_cast<double>(n_t);
  const double spatial_sq = 2.0 * e.beta * e.beta + e.delta * e.delta + e.epsilon * e.epsilon;
  const double temporal_sq = e.alpha * e.alpha + e.gamma * e.gamma;
  r.m1_closed_form_sq = nx1 / 2.0 * spatial_sq;
  r.m1_exact_sq = nx1 * e.beta * e.beta +
                  (nx1 - 1.0) * (e.delta * e.delta + e.epsilon * e.epsilon);
  r.m1_gap = r.m1_closed_form_sq - r.m1_exact_sq;
  r.m2_closed_form_sq = nt / 2.0 * temporal_sq;
  r.m2_exact_sq = (nt - 1.0) * temporal_sq;
  r.m2_gap = r.m2_closed_form_sq - r.m2_exact_sq;
  r.parity_mismatch = ((n_x - 1) % 2 != 0) || (n_t % 2 != 0);
  return r;
}

BoundReport error_bound(double u_exact_norm, double m0_norm, const EffectiveWeights& e,
                        std::size_t n_x, std::size_t n_t) {
  if (u_exact_norm < 0.0 || m0_norm < 0.0) throw ValidationError("error_bound: negative norm");
  if (n_x < 3 || n_t < 2) throw SizingError("error_bound: grid too small");
  BoundReport b;
  b.u_exact_norm = u_exact_norm;
  b.m0_norm = m0_norm;
  const double nx1 = static_cast<double>(n_x - 1);
  const double nt = static_cast<double>(n_t);
  b.space_factor = std::sqrt(nx1 / 2.0) *
                   std::sqrt(2.0 * e.beta * e.beta + e.delta * e.delta + e.epsilon * e.epsilon);
  b.time_factor = std::sqrt(nt / 2.0) * std::sqrt(e.alpha * e.alpha + e.gamma * e.gamma);
  b.bound = std::sqrt(nt * nx1) * (u_exact_norm * (b.space_factor + b.time_factor) + m0_norm);
  return b;
}

Objectives objectives(const SchemeCoefficients& coeffs, double m0_norm) {
  const EffectiveWeights e = effective(coeffs);
  Objectives f;
  f.f1 = std::sqrt(2.0 * e.beta * e.beta + e.delta * e.delta + e.epsilon * e.epsilon);
  f.f2 = std::sqrt(coeffs.alpha_x * coeffs.alpha_x + coeffs.gamma_x * coeffs.gamma_x);
  f.f3 = m0_norm;
  return f;
}

GObjectives g_objectives(const SchemeCoefficients& coeffs, const SpatialTriple& fixed_triple,
                         double m0_norm) {
  GObjectives g;
  const double b = fixed_triple.beta_x + coeffs.beta_t;
  const double d = fixed_triple.delta_x + coeffs.delta_t;
  const double ep = fixed_triple.epsilon_x + coeffs.epsilon_t;
  g.g1 = std::sqrt(b * b + d * d + ep * ep);
  g.g2 = std::sqrt(coeffs.alpha_x * coeffs.alpha_x + coeffs.gamma_x * coeffs.gamma_x);
  g.g3 = m0_norm;
  return g;
}

SchemeCoefficients g_candidate(const GSearchSpec& spec, const std::array<double, 5>& params) {
  SchemeCoefficients c;
  c.beta_x = spec.fixed_triple.beta_x;
  c.delta_x = spec.fixed_triple.delta_x;
  c.epsilon_x = spec.fixed_triple.epsilon_x;
  c.beta_t = params[0];
  c.delta_t = params[1];
  c.epsilon_t = params[2];
  c.alpha_x = params[3];
  c.gamma_x = params[4];
  return c;
}

GSearchResult minimize_g(const GSearchSpec& spec) {
  std::array<double, 5> lo = spec.lo;
  std::array<double, 5> hi = spec.hi;
  for (std::size_t d = 0; d < 5; ++d) {
    if (spec.pinned[d]) {
      lo[d] = hi[d] = spec.pinned_value[d];
    } else if (!(lo[d] <= hi[d])) {
      throw ValidationError(std::string("minimize_g: empty box in dimension ") +
                            g_search_dimension_names[d]);
    }
  }
  const std::size_t points = std::max<std::size_t>(spec.grid_points, 2);

  const auto evaluate = [&](const std::array<double, 5>& params) {
    const SchemeCoefficients c = g_candidate(spec, params);
    const double m0 = spec.m0_norm_fn ? spec.m0_norm_fn(c) : 0.0;
    const GObjectives g = g_objectives(c, spec.fixed_triple, m0);
    return GSample{params, g.g1, g.g2, g.g3};
  };
  const auto score = [&](const GSample& s) {
    return spec.w1 * s.g1 * s.g1 + spec.w2 * s.g2 * s.g2 + spec.w3 * s.g3 * s.g3;
  };

  GSearchResult result;
  std::array<double, 5> center{};
  std::array<double, 5> half{};
  for (std::size_t d = 0; d < 5; ++d) {
    center[d] = 0.5 * (lo[d] + hi[d]);
    half[d] = 0.5 * (hi[d] - lo[d]);
  }

  double best_score = 0.0;
  bool have_best = false;
  for (std::size_t pass = 0; pass <= spec.refinements; ++pass) {
    std::array<std::vector<double>, 5> axes;
    std::size_t total = 1;
    for (std::size_t d = 0; d < 5; ++d) {
      const double a = std::max(lo[d], center[d] - half[d]);
      const double b = std::min(hi[d], center[d] + half[d]);
      if (a == b) {
        axes[d] = {a};
      } else {
        axes[d].resize(points);
        for (std::size_t k = 0; k < points; ++k)
          axes[d][k] = a + (b - a) * static_cast<double>(k) / static_cast<double>(points - 1);
      }
      total *= axes[d].size();
    }

    std::vector<GSample> pass_samples(total);
    parallel_for(total, [&](std::size_t flat) {
      std::array<double, 5> params{};
      std::size_t rest = flat;
      for (std::size_t d = 0; d < 5; ++d) {
        params[d] = axes[d][rest % axes[d].size()];
        rest /= axes[d].size();
      }
      pass_samples[flat] = evaluate(params);
    });

    for (const GSample& s : pass_samples) {
      const double v = score(s);
      if (!have_best || v < best_score) {
        best_score = v;
        have_best = true;
        result.best = s.params;
        result.g1 = s.g1;
        result.g2 = s.g2;
        result.g3 = s.g3;
      }
    }
    if (pass == 0) result.samples = std::move(pass_samples);

    center = result.best;
    for (std::size_t d = 0; d < 5; ++d) half[d] *= 0.5;
  }
  result.objective = best_score;
  return result;
}

AnalysisReport analyze_instance(const GridSpec& grid, const SchemeCoefficients& coeffs,
                                const InitialCondition& ic, double rank_tol) {
  AnalysisReport rep;
  rep.n_x = grid.n_x;
  rep.n_t = grid.n_t;
  const EffectiveWeights e = effective(coeffs);

  const BoundaryData boundary = boundary_from_exact(grid, ic);
  const SylvesterSystem sys = assemble_system(coeffs, boundary, grid);
  const Matrix u_exact = sample_interior_exact(grid, ic);
  const Matrix f = exact_residual(u_exact, sys);

  rep.u_exact_norm = u_exact.frobenius_norm();
  rep.m0_norm = sys.m0.frobenius_norm();
  rep.f_norm = f.frobenius_norm();

  const SVDResult svd1 = svd_small(sys.m1);
  const SVDResult svd2 = svd_small(sys.m2);
  rep.m1_singular_values = svd1.sigma;
  rep.m2_singular_values = svd2.sigma;

  const BlockSplit split = reduce(f, svd1, svd2, rank_tol);
  rep.rank1 = split.r1;
  rep.rank2 = split.r2;
  rep.f11_norm = norm_of(split.f11);
  rep.f12_norm = norm_of(split.f12);
  rep.f21_norm = norm_of(split.f21);
  rep.f22_norm = norm_of(split.f22);
  rep.f_tilde_norm = std::sqrt(rep.f11_norm * rep.f11_norm + rep.f12_norm * rep.f12_norm +
                               rep.f21_norm * rep.f21_norm + rep.f22_norm * rep.f22_norm);

  rep.m1_gram_eigenvalues_closed = gram_block_eigenvalues(e.beta, e.delta, e.epsilon);
  rep.m2_gram_eigenvalues_closed = m2_gram_eigenvalues(e.alpha, e.gamma);
  std::vector<double> m1_sq;
  for (double s : svd1.sigma) m1_sq.push_back(s * s);
  std::vector<double> m2_sq;
  for (double s : svd2.sigma) m2_sq.push_back(s * s);
  rep.m1_spectrum_gap = multiset_gap(
      {rep.m1_gram_eigenvalues_closed.first, rep.m1_gram_eigenvalues_closed.second}, m1_sq);
  rep.m2_spectrum_gap = multiset_gap(
      {rep.m2_gram_eigenvalues_closed.first, rep.m2_gram_eigenvalues_closed.second}, m2_sq);

  rep.norm_identities = frobenius_identities(e, grid.n_x, grid.n_t);
  rep.bound = error_bound(rep.u_exact_norm, rep.m0_norm, e, grid.n_x, grid.n_t);
  rep.bound.has_measured = true;
  rep.bound.measured_f11 = rep.f11_norm;
  rep.bound.holds = rep.f11_norm <= rep.bound.bound;

  rep.f_objectives = objectives(coeffs, rep.m0_norm);
  SpatialTriple fixed = closed_form_triple(grid.h);
  fixed.beta_x *= grid.speed;
  fixed.delta_x *= grid.speed;
  fixed.epsilon_x *= grid.speed;
  rep.g = g_objectives(coeffs, fixed, rep.m0_norm);

  rep.consistency = consistency_defect(coeffs);

  if (is_restricted(coeffs) && e.alpha != 0.0) {
    const SimulationResult sim = run_simulation(grid, coeffs, ic);
    const Matrix residual = scheme_residual(sim.u, sys);
    rep.max_supported_residual = max_abs_supported_columns(residual);
  }

  // Flags are stable identifiers; every discrepancy a lower layer measures
  // surfaces here, nothing is silently dropped.
  rep.flags.push_back("truncated-final-column");
  rep.flags.push_back("sign-convention-negated-residual");
  const double weight_scale =
      std::max({std::abs(e.alpha), std::abs(e.beta), std::abs(e.gamma), std::abs(e.delta),
                std::abs(e.epsilon), 1.0e-300});
  if (std::abs(rep.consistency) > 1.0e-12 * weight_scale) rep.flags.push_back("consistency-defect");
  if (rep.norm_identities.parity_mismatch) rep.flags.push_back("parity-mismatch");
  if (rep.f22_norm > 1.0e-12 * std::max(rep.f_norm, 1.0e-300))
    rep.flags.push_back("incompatible-block");
  return rep;
}

} // namespace drp
