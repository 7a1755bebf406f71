#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "drp/errors.hpp"
#include "drp/optimizer.hpp"
#include "drp/quadrature.hpp"
#include "support.hpp"

using drp::ConstraintKind;
using drp::make_stencil;
using drp::QuadratureSpec;
using drp::SpatialTriple;
using drp::StencilConstraint;
using drp::StencilSpec;
using drp::testing::Rng;

namespace {

const QuadratureSpec band = drp::default_band();

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

} // namespace

TEST_CASE("effective wavenumber of the bare central stencil") {
  SpatialTriple central{0.0, 0.5, -0.5};
  // lambda_bar h = sin(kappa) - j*0 for the antisymmetric pair.
  for (double kappa : {-1.2, -0.3, 0.0, 0.7, 1.5}) {
    std::complex<double> lh = drp::effective_wavenumber(central, 1.0, kappa);
    CHECK(lh.real() == doctest::Approx(std::sin(kappa)).epsilon(1e-14));
    CHECK(std::abs(lh.imag()) < 1.0e-15);
  }
  // A nonzero center weight shows up only in the imaginary part.
  SpatialTriple shifted{0.25, 0.5, -0.5};
  std::complex<double> lh = drp::effective_wavenumber(shifted, 1.0, 0.9);
  CHECK(lh.imag() == doctest::Approx(-0.25).epsilon(1e-14));
}

TEST_CASE("closed-form route hits the frozen values") {
  SpatialTriple t = drp::closed_form_triple(1.0);
  CHECK(std::abs(t.beta_x - 1.680351550177827884126) < 1.0e-14);
  CHECK(std::abs(t.delta_x - (-0.5697450213717212267009)) < 1.0e-14);
  CHECK(std::abs(t.epsilon_x - (-1.069745021371721226701)) < 1.0e-14);
  CHECK(max_abs(drp::closed_form_system_residual(t, 1.0)) < 1.0e-12);
}

TEST_CASE("closed-form system is inconsistent away from h = 1") {
  SpatialTriple t = drp::closed_form_triple(2.0);
  std::vector<double> r = drp::closed_form_system_residual(t, 2.0);
  CHECK(std::abs(r[0] - 2.0) < 1.0e-12);
  CHECK(max_abs(r) > 1.0);
}

TEST_CASE("least-squares route recovers the antisymmetric optimum") {
  SpatialTriple t = drp::least_squares_triple(1.0, band);
  const double two_over_pi = 0.6366197723675813431;
  CHECK(std::abs(t.beta_x) < 1.0e-10);
  CHECK(std::abs(t.delta_x - two_over_pi) < 1.0e-10);
  CHECK(std::abs(t.epsilon_x + two_over_pi) < 1.0e-10);
  CHECK(max_abs(drp::stationarity_residual(t, 1.0, band)) < 1.0e-10);
}

TEST_CASE("least-squares scales by 1/h") {
  SpatialTriple t1 = drp::least_squares_triple(1.0, band);
  SpatialTriple t4 = drp::least_squares_triple(4.0, band);
  CHECK(t4.delta_x == doctest::Approx(t1.delta_x / 4.0).epsilon(1e-12));
}

TEST_CASE("band error values agree with the frozen table") {
  struct Row {
    SpatialTriple t;
    double value;
  };
  const Row rows[] = {
      {{0.0, 0.0, 0.0}, 2.583856390024985015},                      // pi^3/12
      {{0.0, 0.5, -0.5}, 0.1546527168198816338},                    // pi^3/12 + pi/2 - 4
      {{0.0, 2.0 / std::numbers::pi, -2.0 / std::numbers::pi},
       0.03737730055465964232},                                     // pi^3/12 - 8/pi
      {drp::closed_form_triple(1.0), 3.049606103600261208},
  };
  for (const Row& row : rows) {
    const double quad = drp::integrated_error(row.t, 1.0, band);
    const double closed =
        drp::integrated_error_closed_form_3pt(row.t, 1.0, band.kappa_lo, band.kappa_hi);
    CHECK(std::abs(quad - row.value) < 1.0e-10);
    CHECK(std::abs(closed - row.value) < 1.0e-10);
    CHECK(std::abs(quad - closed) < 1.0e-10);
  }
}

TEST_CASE("gradient at the zero stencil matches the hand integral") {
  // d/da_m at a = 0 is -2 * integral(kappa sin(m kappa)); on the default band
  // that is -4 for m = 1 and +4 for m = -1.
  std::vector<double> g = drp::stationarity_residual(SpatialTriple{0.0, 0.0, 0.0}, 1.0, band);
  REQUIRE(g.size() == 3);
  CHECK(std::abs(g[0] - 4.0) < 1.0e-10);  // m = -1
  CHECK(std::abs(g[1]) < 1.0e-12);        // m = 0
  CHECK(std::abs(g[2] + 4.0) < 1.0e-10);  // m = +1
}

TEST_CASE("perturbations around the optimum never reduce the error") {
  SpatialTriple opt = drp::least_squares_triple(1.0, band);
  const double base = drp::integrated_error(opt, 1.0, band);
  Rng rng(0);
  for (int trial = 0; trial < 200; ++trial) {
    SpatialTriple p = opt;
    p.beta_x += rng.uniform(-1.0e-3, 1.0e-3);
    p.delta_x += rng.uniform(-1.0e-3, 1.0e-3);
    p.epsilon_x += rng.uniform(-1.0e-3, 1.0e-3);
    CHECK(drp::integrated_error(p, 1.0, band) >= base - 1.0e-15);
  }
}

TEST_CASE("wide stencils under the antisymmetry constraint") {
  // Frozen via the constrained normal equations solved at high precision.
  StencilSpec s7 = make_stencil(3, {{ConstraintKind::antisymmetry, 0}});
  StencilSpec r7 = drp::least_squares_coefficients(s7, band);
  CHECK(std::abs(r7.coeffs[4] - 0.8203982916884698144) < 1.0e-9);
  CHECK(std::abs(r7.coeffs[5] - (-0.2165089673197924121)) < 1.0e-9);
  CHECK(std::abs(r7.coeffs[6] - 0.03953158132946848912) < 1.0e-9);
  CHECK(std::abs(r7.coeffs[3]) < 1.0e-12);
  CHECK(std::abs(r7.coeffs[2] + r7.coeffs[4]) < 1.0e-12);
  CHECK(std::abs(drp::integrated_error(r7, band) - 1.579614126422061445e-5) < 1.0e-12);

  StencilSpec s5 = make_stencil(2, {{ConstraintKind::antisymmetry, 0}});
  StencilSpec r5 = drp::least_squares_coefficients(s5, band);
  CHECK(std::abs(r5.coeffs[3] - 0.7592532887436210307) < 1.0e-9);
  CHECK(std::abs(r5.coeffs[4] - (-0.1444742077990687075)) < 1.0e-9);
  CHECK(std::abs(drp::integrated_error(r5, band) - 7.223449052603544009e-4) < 1.0e-11);
}

TEST_CASE("taylor constraints reproduce the derivative on monomials") {
  StencilSpec s = make_stencil(2, {{ConstraintKind::taylor_order, 2}});
  StencilSpec r = drp::least_squares_coefficients(s, band);
  double sum0 = 0.0, sum1 = 0.0, sum2 = 0.0;
  for (int m = -2; m <= 2; ++m) {
    const double a = r.coeffs[std::size_t(m + 2)];
    sum0 += a;
    sum1 += a * m;
    sum2 += a * m * m;
  }
  CHECK(std::abs(sum0) < 1.0e-13);
  CHECK(std::abs(sum1 - 1.0) < 1.0e-13);
  CHECK(std::abs(sum2) < 1.0e-12);
}

TEST_CASE("stencil construction guards") {
  CHECK_THROWS_AS(make_stencil(0), drp::ValidationError);
  // 2N+1 = 3 coefficients, but taylor order 2 plus antisymmetry pins them all.
  CHECK_THROWS_AS(make_stencil(1, {{ConstraintKind::taylor_order, 2},
                                   {ConstraintKind::antisymmetry, 0}}),
                  drp::ValidationError);
}
