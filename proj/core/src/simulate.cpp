#include "drp/simulate.hpp"

#include <cmath>
#include <numbers>

#include "drp/errors.hpp"

namespace drp {

namespace {

void check_level(const std::vector<double>& level, double guard, std::size_t step_index) {
  for (double v : level) {
    if (!std::isfinite(v))
      throw InstabilityError("simulation: non-finite value at level " + std::to_string(step_index),
                             static_cast<int>(step_index));
    if (std::abs(v) > guard)
      throw InstabilityError("simulation: overflow guard crossed at level " +
                                 std::to_string(step_index),
                             static_cast<int>(step_index));
  }
}

void require_explicit(const SchemeCoefficients& coeffs, const EffectiveWeights& e) {
  if (!is_restricted(coeffs))
    throw ValidationError("step: time stepping needs a restricted coefficient set");
  if (e.alpha == 0.0) throw NotExplicitError("step: alpha must be nonzero for an explicit update");
}

void require_levels(const EffectiveWeights& e, const std::vector<double>* prev2) {
  if (e.gamma != 0.0 && prev2 == nullptr)
    throw ValidationError("step: three-level scheme needs the level before the previous one");
}

std::vector<double> periodic_step(const std::vector<double>& prev, const std::vector<double>* prev2,
                                  const SchemeCoefficients& coeffs) {
  const EffectiveWeights e = effective(coeffs);
  require_explicit(coeffs, e);
  require_levels(e, prev2);
  const std::size_t n_x = prev.size() - 1;
  // Nodes 0..n_x-1 are independent; node n_x repeats node 0.
  std::vector<double> next(n_x + 1);
  for (std::size_t i = 0; i < n_x; ++i) {
    const std::size_t ip = (i + 1) % n_x;
    const std::size_t im = (i + n_x - 1) % n_x;
    double s = e.beta * prev[i] + e.delta * prev[ip] + e.epsilon * prev[im];
    if (e.gamma != 0.0) s += e.gamma * (*prev2)[i];
    next[i] = -s / e.alpha;
  }
  next[n_x] = next[0];
  return next;
}

} // namespace

InitialCondition sine_wave(double wavenumber) {
  InitialCondition ic;
  ic.kind = ICKind::sine;
  ic.wavenumber = wavenumber;
  return ic;
}

InitialCondition gaussian_pulse(double center, double width) {
  InitialCondition ic;
  ic.kind = ICKind::gaussian;
  ic.center = center;
  ic.width = width;
  return ic;
}

void validate_ic(const InitialCondition& ic, const GridSpec& grid) {
  if (ic.kind == ICKind::sine) {
    if (!(ic.wavenumber > 0.0)) throw ValidationError("sine initial condition: wavenumber must be positive");
    if (!(ic.wavenumber * grid.h < std::numbers::pi))
      throw ValidationError("sine initial condition: k h must stay below pi to resolve the wave");
  } else {
    if (!(ic.width > 0.0)) throw ValidationError("gaussian initial condition: width must be positive");
    if (ic.width < 2.0 * grid.h)
      throw ValidationError("gaussian initial condition: width below 2h cannot be resolved");
  }
}

std::vector<std::string> ic_warnings(const InitialCondition& ic, const GridSpec& grid) {
  std::vector<std::string> w;
  if (ic.kind == ICKind::gaussian && ic.width < 4.0 * grid.h)
    w.push_back("gaussian width below 4h: marginally resolved");
  return w;
}

double initial_profile(const InitialCondition& ic, double x) {
  if (ic.kind == ICKind::sine) return std::sin(ic.wavenumber * x);
  const double d = (x - ic.center) / ic.width;
  return std::exp(-0.5 * d * d);
}

double exact_solution(const InitialCondition& ic, double x, double t, double speed) {
  return initial_profile(ic, x - speed * t);
}

std::vector<double> step(const std::vector<double>& prev, const std::vector<double>* prev2,
                         const SchemeCoefficients& coeffs, double left_value, double right_value) {
  const EffectiveWeights e = effective(coeffs);
  require_explicit(coeffs, e);
  require_levels(e, prev2);
  if (prev.size() < 4) throw DimensionError("step: level must hold at least n_x + 1 = 4 values");
  if (prev2 != nullptr && prev2->size() != prev.size())
    throw DimensionError("step: prior levels differ in length");
  const std::size_t n_x = prev.size() - 1;
  std::vector<double> next(n_x + 1);
  next[0] = left_value;
  next[n_x] = right_value;
  for (std::size_t i = 1; i < n_x; ++i) {
    double s = e.beta * prev[i] + e.delta * prev[i + 1] + e.epsilon * prev[i - 1];
    if (e.gamma != 0.0) s += e.gamma * (*prev2)[i];
    next[i] = -s / e.alpha;
  }
  return next;
}

SimulationResult run_simulation(const GridSpec& grid, const SchemeCoefficients& coeffs,
                                const InitialCondition& ic, const SimulationOptions& options,
                                std::size_t n_levels) {
  validate_ic(ic, grid);
  if (n_levels == all_levels) n_levels = grid.n_t;
  const EffectiveWeights e = effective(coeffs);
  require_explicit(coeffs, e);

  SimulationResult result;
  result.u = Matrix(grid.n_x - 1, n_levels);
  if (n_levels == 0) return result;

  std::vector<double> prev2;
  std::vector<double> prev(grid.n_x + 1);
  for (std::size_t i = 0; i <= grid.n_x; ++i)
    prev[i] = initial_profile(ic, static_cast<double>(i) * grid.h);

  const bool three_level = e.gamma != 0.0;
  std::size_t first_computed = 1;
  if (three_level) {
    std::vector<double> level1;
    if (options.bootstrap == Bootstrap::exact) {
      level1.resize(grid.n_x + 1);
      for (std::size_t i = 0; i <= grid.n_x; ++i)
        level1[i] = exact_solution(ic, static_cast<double>(i) * grid.h, grid.tau, grid.speed);
    } else {
      const SchemeCoefficients ftcs = preset_scheme("ftcs", grid);
      if (options.boundary == BoundaryPolicy::periodic) {
        level1 = periodic_step(prev, nullptr, ftcs);
      } else {
        level1 = step(prev, nullptr, ftcs, exact_solution(ic, 0.0, grid.tau, grid.speed),
                      exact_solution(ic, grid.length, grid.tau, grid.speed));
      }
    }
    check_level(level1, options.overflow_guard, 1);
    for (std::size_t i = 1; i < grid.n_x; ++i) result.u(i - 1, 0) = level1[i];
    prev2 = std::move(prev);
    prev = std::move(level1);
    first_computed = 2;
  }

  for (std::size_t n = first_computed; n <= n_levels; ++n) {
    const double t = static_cast<double>(n) * grid.tau;
    std::vector<double> next;
    if (options.boundary == BoundaryPolicy::periodic) {
      next = periodic_step(prev, three_level ? &prev2 : nullptr, coeffs);
    } else {
      next = step(prev, three_level ? &prev2 : nullptr, coeffs, exact_solution(ic, 0.0, t, grid.speed),
                  exact_solution(ic, grid.length, t, grid.speed));
    }
    check_level(next, options.overflow_guard, n);
    for (std::size_t i = 1; i < grid.n_x; ++i) result.u(i - 1, n - 1) = next[i];
    if (three_level) prev2.swap(prev);
    prev = std::move(next);
  }

  result.series = error_norms(result.u, grid, ic);
  return result;
}

ErrorSeries error_norms(const Matrix& u, const GridSpec& grid, const InitialCondition& ic) {
  if (u.rows() != grid.n_x - 1) throw DimensionError("error_norms: row count must be n_x - 1");
  ErrorSeries series;
  series.reserve(u.cols());
  for (std::size_t j = 0; j < u.cols(); ++j) {
    const std::size_t n = j + 1;
    const double t = static_cast<double>(n) * grid.tau;
    double linf = 0.0;
    double sq = 0.0;
    for (std::size_t i = 1; i < grid.n_x; ++i) {
      const double diff =
          u(i - 1, j) - exact_solution(ic, static_cast<double>(i) * grid.h, t, grid.speed);
      linf = std::max(linf, std::abs(diff));
      sq += diff * diff;
    }
    series.push_back(ErrorPoint{n, t, t / grid.final_time, linf, std::sqrt(grid.h * sq)});
  }
  return series;
}

Matrix sample_interior_exact(const GridSpec& grid, const InitialCondition& ic) {
  Matrix u(grid.n_x - 1, grid.n_t);
  for (std::size_t i = 1; i < grid.n_x; ++i)
    for (std::size_t n = 1; n <= grid.n_t; ++n)
      u(i - 1, n - 1) = exact_solution(ic, static_cast<double>(i) * grid.h,
                                       static_cast<double>(n) * grid.tau, grid.speed);
  return u;
}

BoundaryData boundary_from_exact(const GridSpec& grid, const InitialCondition& ic) {
  BoundaryData b;
  b.initial.resize(grid.n_x + 1);
  for (std::size_t i = 0; i <= grid.n_x; ++i)
    b.initial[i] = initial_profile(ic, static_cast<double>(i) * grid.h);
  b.left.resize(grid.n_t + 1);
  b.right.resize(grid.n_t + 1);
  for (std::size_t n = 0; n <= grid.n_t; ++n) {
    const double t = static_cast<double>(n) * grid.tau;
    b.left[n] = exact_solution(ic, 0.0, t, grid.speed);
    b.right[n] = exact_solution(ic, grid.length, t, grid.speed);
  }
  return b;
}

} // namespace drp
