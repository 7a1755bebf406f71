#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "drp/errors.hpp"
#include "drp/scheme.hpp"

using drp::GridSpec;
using drp::make_grid;
using drp::preset_scheme;
using drp::SchemeCoefficients;

TEST_CASE("grid derives h, tau, sigma") {
  GridSpec g = make_grid(2.0, 0.5, 8, 10, 4.0);
  CHECK(g.h == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(g.tau == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(g.sigma == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("grid guards") {
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 8, 8, 1.0), drp::SizingError);
  CHECK_THROWS_AS(make_grid(1.0, 0.0, 8, 8, 1.0), drp::SizingError);
  CHECK_THROWS_AS(make_grid(1.0, 1.0, 2, 8, 1.0), drp::SizingError);
  CHECK_THROWS_AS(make_grid(1.0, 1.0, 8, 1, 1.0), drp::SizingError);
  CHECK_THROWS_AS(make_grid(1.0, 1.0, 8, 8, 0.0), drp::ValidationError);
}

TEST_CASE("ftcs preset") {
  GridSpec g = make_grid(1.0, 0.5, 10, 20, 2.0);
  SchemeCoefficients c = preset_scheme("ftcs", g);
  CHECK(c.alpha_x == doctest::Approx(1.0 / g.tau).epsilon(1e-15));
  CHECK(c.beta_x == doctest::Approx(-1.0 / g.tau).epsilon(1e-15));
  CHECK(c.delta_x == doctest::Approx(g.speed / (2.0 * g.h)).epsilon(1e-15));
  CHECK(c.epsilon_x == doctest::Approx(-g.speed / (2.0 * g.h)).epsilon(1e-15));
  CHECK(c.gamma_x == 0.0);
  CHECK(drp::is_restricted(c));
  CHECK(std::abs(drp::consistency_defect(c)) < 1.0e-12);
}

TEST_CASE("leapfrog presets share the time part") {
  GridSpec g = make_grid(10.0, 5.0, 10, 10, 1.0); // h = 1 so spatial weights are bare
  SchemeCoefficients central = preset_scheme("leapfrog-central", g);
  CHECK(central.alpha_x == doctest::Approx(1.0 / (2.0 * g.tau)).epsilon(1e-15));
  CHECK(central.gamma_x == doctest::Approx(-1.0 / (2.0 * g.tau)).epsilon(1e-15));
  CHECK(central.delta_x == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(central.epsilon_x == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(central.beta_x == 0.0);
  CHECK(std::abs(drp::consistency_defect(central)) < 1.0e-12);

  SchemeCoefficients drp_cf = preset_scheme("leapfrog-drp-closed-form", g);
  CHECK(drp_cf.alpha_x == central.alpha_x);
  CHECK(drp_cf.gamma_x == central.gamma_x);
  CHECK(drp_cf.beta_x == doctest::Approx(1.680351550177827884126).epsilon(1e-14));
  // This route's stencil does not sum to zero; the defect is surfaced.
  CHECK(drp::consistency_defect(drp_cf) ==
        doctest::Approx(0.04086150743438543072).epsilon(1e-12));

  SchemeCoefficients drp_ls = preset_scheme("leapfrog-drp-least-squares", g);
  CHECK(drp_ls.beta_x == 0.0);
  CHECK(drp_ls.delta_x == doctest::Approx(0.6366197723675813431).epsilon(1e-13));
  CHECK(std::abs(drp::consistency_defect(drp_ls)) < 1.0e-12);

  CHECK_THROWS_AS(preset_scheme("upwind", g), drp::UnknownNameError);
}

TEST_CASE("speed scales the spatial weights") {
  GridSpec g = make_grid(10.0, 5.0, 10, 10, 3.0);
  SchemeCoefficients c = preset_scheme("leapfrog-drp-least-squares", g);
  CHECK(c.delta_x == doctest::Approx(3.0 * 0.6366197723675813431).epsilon(1e-13));
}

TEST_CASE("restriction is an exact-zero test") {
  SchemeCoefficients c;
  c.alpha_x = 1.0;
  CHECK(drp::is_restricted(c));
  c.zeta = 1.0e-300;
  CHECK_FALSE(drp::is_restricted(c));
  c.zeta = 0.0;
  c.alpha_t = 1.0e-300;
  CHECK_FALSE(drp::is_restricted(c));
}

TEST_CASE("effective weights sum the split") {
  SchemeCoefficients c;
  c.alpha_x = 1.0;
  c.alpha_t = 2.0;
  c.beta_x = -1.0;
  c.beta_t = 0.25;
  drp::EffectiveWeights e = drp::effective(c);
  CHECK(e.alpha == 3.0);
  CHECK(e.beta == -0.75);
}

TEST_CASE("boundary data validation") {
  GridSpec g = make_grid(1.0, 1.0, 4, 3, 1.0);
  drp::BoundaryData b;
  b.initial = {1.0, 2.0, 3.0, 4.0, 5.0};
  b.left = {1.0, 0.5, 0.25, 0.125};
  b.right = {5.0, 4.0, 3.0, 2.0};
  CHECK_NOTHROW(drp::validate_boundary(b, g));

  drp::BoundaryData short_initial = b;
  short_initial.initial.pop_back();
  CHECK_THROWS_AS(drp::validate_boundary(short_initial, g), drp::DimensionError);

  drp::BoundaryData corner = b;
  corner.left[0] = 7.0;
  CHECK_THROWS_AS(drp::validate_boundary(corner, g), drp::ValidationError);

  drp::BoundaryData corner_r = b;
  corner_r.right[0] = 7.0;
  CHECK_THROWS_AS(drp::validate_boundary(corner_r, g), drp::ValidationError);
}
