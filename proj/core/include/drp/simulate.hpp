#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "drp/matrix.hpp"
#include "drp/scheme.hpp"

namespace drp {

enum class ICKind { sine, gaussian };

struct InitialCondition {
  ICKind kind = ICKind::sine;
  double wavenumber = 0.0; // sine
  double center = 0.0;     // gaussian
  double width = 0.0;      // gaussian
};

InitialCondition sine_wave(double wavenumber);
InitialCondition gaussian_pulse(double center, double width);

// sine must resolve on the grid (k h < pi); gaussian width must be at least
// 2h. Width below 4h is legal but flagged by ic_warnings.
void validate_ic(const InitialCondition& ic, const GridSpec& grid);
std::vector<std::string> ic_warnings(const InitialCondition& ic, const GridSpec& grid);

double initial_profile(const InitialCondition& ic, double x);

// u_0(x - c t): constant along characteristics.
double exact_solution(const InitialCondition& ic, double x, double t, double speed);

enum class BoundaryPolicy { dirichlet_exact, periodic };
enum class Bootstrap { exact, ftcs_step };

struct SimulationOptions {
  BoundaryPolicy boundary = BoundaryPolicy::dirichlet_exact;
  Bootstrap bootstrap = Bootstrap::exact;
  double overflow_guard = 1.0e100;
};

struct ErrorPoint {
  std::size_t step;
  double t;
  double t_over_total;
  double linf;
  double l2; // sqrt(h * sum over interior nodes)
};

using ErrorSeries = std::vector<ErrorPoint>;

// One explicit update. Levels are full rows of n_x + 1 nodal values; the new
// boundary nodes take the supplied values. Restricted coefficients with
// alpha != 0 required; three-level schemes (gamma != 0) need prev2.
std::vector<double> step(const std::vector<double>& prev, const std::vector<double>* prev2,
                         const SchemeCoefficients& coeffs, double left_value, double right_value);

struct SimulationResult {
  Matrix u; // interior, (n_x - 1) x levels
  ErrorSeries series;
};

inline constexpr std::size_t all_levels = std::numeric_limits<std::size_t>::max();

// Steps levels 1..n_levels from the initial profile. Dirichlet boundaries are
// re-sampled from the exact solution every level; the periodic policy wraps
// the stencil instead. Overflow or non-finite values abort with
// InstabilityError carrying the first bad level.
SimulationResult run_simulation(const GridSpec& grid, const SchemeCoefficients& coeffs,
                                const InitialCondition& ic, const SimulationOptions& options = {},
                                std::size_t n_levels = all_levels);

ErrorSeries error_norms(const Matrix& u, const GridSpec& grid, const InitialCondition& ic);

// Exact solution sampled on the interior space-time nodes.
Matrix sample_interior_exact(const GridSpec& grid, const InitialCondition& ic);

BoundaryData boundary_from_exact(const GridSpec& grid, const InitialCondition& ic);

} // namespace drp
