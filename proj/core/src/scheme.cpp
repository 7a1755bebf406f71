#include "drp/scheme.hpp"

#include <stdexcept>

#include "drp/errors.hpp"
#include "drp/optimizer.hpp"

namespace drp {

GridSpec make_grid(double length, double final_time, std::size_t n_x, std::size_t n_t,
                   double speed) {
  if (!(length > 0.0)) throw SizingError("make_grid: domain length must be positive");
  if (!(final_time > 0.0)) throw SizingError("make_grid: final time must be positive");
  if (n_x < 3) throw SizingError("make_grid: n_x must be at least 3");
  if (n_t < 2) throw SizingError("make_grid: n_t must be at least 2");
  if (speed == 0.0) throw ValidationError("make_grid: advection speed must be nonzero");
  GridSpec g;
  g.length = length;
  g.final_time = final_time;
  g.n_x = n_x;
  g.n_t = n_t;
  g.speed = speed;
  g.h = length / static_cast<double>(n_x);
  g.tau = final_time / static_cast<double>(n_t);
  g.sigma = speed * g.tau / g.h;
  return g;
}

EffectiveWeights effective(const SchemeCoefficients& c) {
  return EffectiveWeights{c.alpha_x + c.alpha_t, c.beta_x + c.beta_t, c.gamma_x + c.gamma_t,
                          c.delta_x + c.delta_t, c.epsilon_x + c.epsilon_t,
                          c.zeta,               c.eta,               c.theta,
                          c.vartheta};
}

bool is_restricted(const SchemeCoefficients& c) {
  return c.alpha_t == 0.0 && c.gamma_t == 0.0 && c.zeta == 0.0 && c.eta == 0.0 &&
         c.theta == 0.0 && c.vartheta == 0.0;
}

double consistency_defect(const SchemeCoefficients& c) {
  const EffectiveWeights e = effective(c);
  return e.alpha + e.beta + e.gamma + e.delta + e.epsilon;
}

SchemeCoefficients preset_scheme(std::string_view name, const GridSpec& grid) {
  const double c = grid.speed;
  const double h = grid.h;
  const double tau = grid.tau;
  SchemeCoefficients s;
  if (name == "ftcs") {
    s.alpha_x = 1.0 / tau;
    s.beta_x = -1.0 / tau;
    s.delta_x = c / (2.0 * h);
    s.epsilon_x = -c / (2.0 * h);
    return s;
  }
  s.alpha_x = 1.0 / (2.0 * tau);
  s.gamma_x = -1.0 / (2.0 * tau);
  if (name == "leapfrog-central") {
    s.delta_x = c / (2.0 * h);
    s.epsilon_x = -c / (2.0 * h);
    return s;
  }
  if (name == "leapfrog-drp-closed-form") {
    const SpatialTriple t = closed_form_triple(h);
    s.beta_x = c * t.beta_x;
    s.delta_x = c * t.delta_x;
    s.epsilon_x = c * t.epsilon_x;
    return s;
  }
  if (name == "leapfrog-drp-least-squares") {
    const SpatialTriple t = least_squares_triple(h, default_band());
    s.beta_x = c * t.beta_x;
    s.delta_x = c * t.delta_x;
    s.epsilon_x = c * t.epsilon_x;
    return s;
  }
  throw UnknownNameError("preset_scheme: unknown scheme '" + std::string(name) + "'");
}

void validate_boundary(const BoundaryData& b, const GridSpec& grid) {
  if (b.initial.size() != grid.n_x + 1)
    throw DimensionError("boundary: initial row must hold n_x + 1 values");
  if (b.left.size() != grid.n_t + 1 || b.right.size() != grid.n_t + 1)
    throw DimensionError("boundary: each column must hold n_t + 1 values");
  if (b.initial.front() != b.left.front() || b.initial.back() != b.right.front())
    throw ValidationError("boundary: corner values disagree between row and columns");
}

} // namespace drp
