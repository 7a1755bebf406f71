#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "drp/errors.hpp"
#include "drp/quadrature.hpp"
#include "support.hpp"

using drp::gauss_legendre;
using drp::GaussLegendre;
using drp::testing::Rng;

TEST_CASE("two-point rule on [-1, 1]") {
  GaussLegendre gl = gauss_legendre(2, -1.0, 1.0);
  const double node = 1.0 / std::sqrt(3.0);
  CHECK(gl.x[0] == doctest::Approx(-node).epsilon(1e-15));
  CHECK(gl.x[1] == doctest::Approx(node).epsilon(1e-15));
  CHECK(gl.w[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gl.w[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("four-point rule on [-1, 1]") {
  GaussLegendre gl = gauss_legendre(4, -1.0, 1.0);
  CHECK(gl.x[0] == doctest::Approx(-0.8611363115940526).epsilon(1e-14));
  CHECK(gl.x[1] == doctest::Approx(-0.3399810435848563).epsilon(1e-14));
  CHECK(gl.x[2] == doctest::Approx(0.3399810435848563).epsilon(1e-14));
  CHECK(gl.x[3] == doctest::Approx(0.8611363115940526).epsilon(1e-14));
  CHECK(gl.w[0] == doctest::Approx(0.3478548451374538).epsilon(1e-14));
  CHECK(gl.w[1] == doctest::Approx(0.6521451548625461).epsilon(1e-14));
}

TEST_CASE("weights sum to the interval length") {
  for (std::size_t n : {2, 7, 16, 33, 64, 128}) {
    GaussLegendre gl = gauss_legendre(n, -2.5, 4.0);
    double sum = 0.0;
    for (double w : gl.w) sum += w;
    CHECK(sum == doctest::Approx(6.5).epsilon(1e-13));
    for (std::size_t i = 0; i + 1 < gl.x.size(); ++i) CHECK(gl.x[i] < gl.x[i + 1]);
    for (double w : gl.w) CHECK(w > 0.0);
  }
}

TEST_CASE("degree 2n-1 polynomials integrate exactly") {
  Rng rng(0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = rng.index(2, 10);
    const std::size_t degree = 2 * n - 1;
    std::vector<double> coeff(degree + 1);
    for (double& c : coeff) c = rng.uniform(-1.0, 1.0);
    const double a = rng.uniform(-2.0, 0.0);
    const double b = rng.uniform(0.5, 2.5);

    GaussLegendre gl = gauss_legendre(n, a, b);
    double got = 0.0;
    for (std::size_t i = 0; i < gl.x.size(); ++i) {
      double p = 0.0;
      for (std::size_t d = coeff.size(); d-- > 0;) p = p * gl.x[i] + coeff[d];
      got += gl.w[i] * p;
    }

    double want = 0.0;
    for (std::size_t d = 0; d < coeff.size(); ++d)
      want += coeff[d] * (std::pow(b, double(d + 1)) - std::pow(a, double(d + 1))) / double(d + 1);
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("band integral of kappa squared") {
  drp::QuadratureSpec band = drp::default_band();
  CHECK(band.kappa_lo == doctest::Approx(-std::numbers::pi / 2).epsilon(1e-15));
  CHECK(band.kappa_hi == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK(band.nodes == 64);
  const double got = drp::integrate([](double k) { return k * k; }, band);
  const double want = 2.583856390024985015; // pi^3 / 12
  CHECK(std::abs(got - want) < 1.0e-13);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(drp::make_quadrature(0.0, 1.0, 15), drp::ValidationError);
  CHECK_THROWS_AS(drp::make_quadrature(0.0, 1.0, 17), drp::ValidationError);
  CHECK_THROWS_AS(drp::make_quadrature(1.0, 1.0, 16), drp::ValidationError);
  CHECK_THROWS_AS(drp::make_quadrature(2.0, 1.0, 16), drp::ValidationError);
  drp::QuadratureSpec ok = drp::make_quadrature(-1.0, 1.0, 16);
  CHECK(ok.nodes == 16);
}
