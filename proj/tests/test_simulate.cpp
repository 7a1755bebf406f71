#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "drp/errors.hpp"
#include "drp/scheme.hpp"
#include "drp/simulate.hpp"

using drp::GridSpec;
using drp::InitialCondition;
using drp::SchemeCoefficients;
using drp::SimulationOptions;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("profiles and exact transport") {
  InitialCondition sine = drp::sine_wave(2.0 * pi);
  CHECK(drp::initial_profile(sine, 0.25) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(drp::exact_solution(sine, 0.25, 0.5, 1.0) ==
        doctest::Approx(std::sin(2.0 * pi * -0.25)).epsilon(1e-12));

  InitialCondition pulse = drp::gaussian_pulse(0.5, 0.1);
  CHECK(drp::initial_profile(pulse, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(drp::exact_solution(pulse, 0.7, 0.2, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("initial condition validation") {
  GridSpec g = drp::make_grid(1.0, 1.0, 8, 8, 1.0); // h = 0.125
  CHECK_THROWS_AS(drp::validate_ic(drp::sine_wave(0.0), g), drp::ValidationError);
  CHECK_THROWS_AS(drp::validate_ic(drp::sine_wave(8.0 * pi + 1.0), g), drp::ValidationError);
  CHECK_NOTHROW(drp::validate_ic(drp::sine_wave(2.0 * pi), g));

  CHECK_THROWS_AS(drp::validate_ic(drp::gaussian_pulse(0.5, 0.0), g), drp::ValidationError);
  CHECK_THROWS_AS(drp::validate_ic(drp::gaussian_pulse(0.5, 0.2), g), drp::ValidationError);
  CHECK_NOTHROW(drp::validate_ic(drp::gaussian_pulse(0.5, 0.3), g));

  CHECK(drp::ic_warnings(drp::gaussian_pulse(0.5, 0.3), g).size() == 1);
  CHECK(drp::ic_warnings(drp::gaussian_pulse(0.5, 0.6), g).empty());
  CHECK(drp::ic_warnings(drp::sine_wave(2.0 * pi), g).empty());
}

TEST_CASE("one explicit step matches the hand-solved stencil") {
  // alpha u^{n+1} + beta u^n + delta u_{i+1}^n + epsilon u_{i-1}^n = 0
  SchemeCoefficients c;
  c.alpha_x = 2.0;
  c.beta_x = 0.5;
  c.delta_x = -1.0;
  c.epsilon_x = 3.0;
  std::vector<double> prev = {1.0, 2.0, -1.0, 0.5, 4.0};
  std::vector<double> next = drp::step(prev, nullptr, c, 10.0, 20.0);
  REQUIRE(next.size() == 5);
  CHECK(next.front() == 10.0);
  CHECK(next.back() == 20.0);
  // i = 1: -(0.5*2 + (-1)*(-1) + 3*1) / 2 = -2.5
  CHECK(next[1] == doctest::Approx(-2.5).epsilon(1e-15));
  // i = 2: -(0.5*(-1) + (-1)*0.5 + 3*2) / 2 = -2.5
  CHECK(next[2] == doctest::Approx(-2.5).epsilon(1e-15));
}

TEST_CASE("step rejects unusable coefficient sets") {
  std::vector<double> prev = {0.0, 1.0, 2.0, 3.0};
  SchemeCoefficients no_alpha;
  no_alpha.beta_x = 1.0;
  CHECK_THROWS_AS(drp::step(prev, nullptr, no_alpha, 0.0, 0.0), drp::NotExplicitError);

  SchemeCoefficients corner;
  corner.alpha_x = 1.0;
  corner.zeta = 0.5;
  CHECK_THROWS_AS(drp::step(prev, nullptr, corner, 0.0, 0.0), drp::ValidationError);

  SchemeCoefficients three_level;
  three_level.alpha_x = 1.0;
  three_level.gamma_x = -1.0;
  CHECK_THROWS_AS(drp::step(prev, nullptr, three_level, 0.0, 0.0), drp::ValidationError);

  SchemeCoefficients ok;
  ok.alpha_x = 1.0;
  ok.beta_x = -1.0;
  CHECK_THROWS_AS(drp::step({1.0, 2.0}, nullptr, ok, 0.0, 0.0), drp::DimensionError);
}

TEST_CASE("leapfrog at unit courant number transports exactly") {
  GridSpec g = drp::make_grid(1.0, 1.0, 64, 64, 1.0);
  SchemeCoefficients c = drp::preset_scheme("leapfrog-central", g);
  drp::SimulationResult r = drp::run_simulation(g, c, drp::sine_wave(2.0 * pi));
  REQUIRE(r.series.size() == 64);
  for (const drp::ErrorPoint& p : r.series) {
    CHECK(p.linf < 1.0e-12);
    CHECK(p.l2 < 1.0e-12);
  }
  CHECK(r.series.back().t == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.series.back().t_over_total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.series.front().step == 1);
}

TEST_CASE("ftcs blows up at unit courant number and reports the level") {
  GridSpec g = drp::make_grid(1.0, 23.4375, 64, 1500, 1.0); // sigma = 1
  SchemeCoefficients c = drp::preset_scheme("ftcs", g);
  try {
    drp::run_simulation(g, c, drp::sine_wave(2.0 * pi));
    FAIL("expected InstabilityError");
  } catch (const drp::InstabilityError& e) {
    CHECK(e.step() == 703);
  }
}

TEST_CASE("overflow guard is configurable") {
  GridSpec g = drp::make_grid(1.0, 23.4375, 64, 1500, 1.0);
  SchemeCoefficients c = drp::preset_scheme("ftcs", g);
  SimulationOptions strict;
  strict.overflow_guard = 1.0e3;
  try {
    drp::run_simulation(g, c, drp::sine_wave(2.0 * pi), strict);
    FAIL("expected InstabilityError");
  } catch (const drp::InstabilityError& e) {
    CHECK(e.step() < 703);
    CHECK(e.step() > 0);
  }
}

TEST_CASE("periodic boundaries wrap the stencil") {
  GridSpec g = drp::make_grid(1.0, 1.0, 64, 64, 1.0);
  SchemeCoefficients c = drp::preset_scheme("leapfrog-central", g);
  SimulationOptions opt;
  opt.boundary = drp::BoundaryPolicy::periodic;
  // The sine mode is L-periodic, so the periodic run is exact too.
  drp::SimulationResult r = drp::run_simulation(g, c, drp::sine_wave(2.0 * pi), opt);
  CHECK(r.series.back().linf < 1.0e-12);
}

TEST_CASE("ftcs bootstrap differs from the exact bootstrap") {
  GridSpec g = drp::make_grid(1.0, 0.25, 32, 32, 1.0); // sigma = 0.25
  SchemeCoefficients c = drp::preset_scheme("leapfrog-central", g);

  SimulationOptions exact_boot;
  drp::SimulationResult a = drp::run_simulation(g, c, drp::sine_wave(2.0 * pi), exact_boot);

  SimulationOptions ftcs_boot;
  ftcs_boot.bootstrap = drp::Bootstrap::ftcs_step;
  drp::SimulationResult b = drp::run_simulation(g, c, drp::sine_wave(2.0 * pi), ftcs_boot);

  CHECK(drp::max_abs_diff(a.u, b.u) > 1.0e-8);
  CHECK(b.series.back().linf < 0.05); // still a convergent combination
}

TEST_CASE("error norms are zero for the sampled exact field") {
  GridSpec g = drp::make_grid(1.0, 0.5, 16, 8, 1.0);
  InitialCondition ic = drp::sine_wave(2.0 * pi);
  drp::Matrix u = drp::sample_interior_exact(g, ic);
  drp::ErrorSeries series = drp::error_norms(u, g, ic);
  REQUIRE(series.size() == 8);
  for (const drp::ErrorPoint& p : series) {
    CHECK(p.linf == 0.0);
    CHECK(p.l2 == 0.0);
  }
  CHECK(series[3].step == 4);
  CHECK(series[3].t == doctest::Approx(4.0 * g.tau).epsilon(1e-15));
}

TEST_CASE("boundary data from the exact solution is corner-consistent") {
  GridSpec g = drp::make_grid(1.0, 0.5, 16, 8, 1.0);
  drp::BoundaryData b = drp::boundary_from_exact(g, drp::gaussian_pulse(0.3, 0.11));
  CHECK_NOTHROW(drp::validate_boundary(b, g));
  CHECK(b.initial.size() == 17);
  CHECK(b.left.size() == 9);
}
