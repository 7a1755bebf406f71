#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace drp {

// Uniform space-time grid for the advection problem. sigma is always the
// stored c * tau / h, never set independently.
struct GridSpec {
  double length;     // L
  double final_time; // T
  std::size_t n_x;
  std::size_t n_t;
  double speed; // c
  double h;
  double tau;
  double sigma;
};

GridSpec make_grid(double length, double final_time, std::size_t n_x, std::size_t n_t,
                   double speed);

// Nine stencil weights with the space/time split. The scheme at an interior
// node (i, n) reads
//   alpha u_i^{n+1} + beta u_i^n + gamma u_i^{n-1} + delta u_{i+1}^n
//   + epsilon u_{i-1}^n + zeta u_{i+1}^{n+1} + eta u_{i-1}^{n-1}
//   + theta u_{i-1}^{n+1} + vartheta u_{i+1}^{n-1} = 0
// with alpha = alpha_x + alpha_t and so on for the split pairs.
struct SchemeCoefficients {
  double alpha_x = 0.0, alpha_t = 0.0;
  double beta_x = 0.0, beta_t = 0.0;
  double gamma_x = 0.0, gamma_t = 0.0;
  double delta_x = 0.0, delta_t = 0.0;
  double epsilon_x = 0.0, epsilon_t = 0.0;
  double zeta = 0.0, eta = 0.0, theta = 0.0, vartheta = 0.0;
};

struct EffectiveWeights {
  double alpha, beta, gamma, delta, epsilon;
  double zeta, eta, theta, vartheta;
};

EffectiveWeights effective(const SchemeCoefficients& c);

// Exact-zero test on alpha_t, gamma_t, zeta, eta, theta, vartheta; callers
// quantize constructed coefficients, no tolerance here.
bool is_restricted(const SchemeCoefficients& c);

// Sum of the five effective two-level/three-level weights. Zero iff constants
// solve the discrete scheme; reported, never hidden, when a preset violates it.
double consistency_defect(const SchemeCoefficients& c);

inline constexpr std::array<std::string_view, 4> preset_names = {
    "ftcs", "leapfrog-central", "leapfrog-drp-closed-form", "leapfrog-drp-least-squares"};

// Restricted coefficient sets for the named schemes. Normalization: the
// leading time-difference weight is 1/tau (two-level) or 1/(2 tau)
// (three-level); spatial weights carry c/h.
SchemeCoefficients preset_scheme(std::string_view name, const GridSpec& grid);

// Initial row plus both boundary columns, corner-consistent with each other.
struct BoundaryData {
  std::vector<double> initial; // u_i^0,      i = 0..n_x
  std::vector<double> left;    // u_0^n,      n = 0..n_t
  std::vector<double> right;   // u_{n_x}^n,  n = 0..n_t
};

void validate_boundary(const BoundaryData& b, const GridSpec& grid);

} // namespace drp
