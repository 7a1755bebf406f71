#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "drp/analysis.hpp"
#include "drp/matrix.hpp"
#include "drp/optimizer.hpp"
#include "drp/quadrature.hpp"
#include "drp/scheme.hpp"
#include "drp/simulate.hpp"
#include "drp/svd.hpp"
#include "drp/sylvester.hpp"

namespace {

drp::Matrix random_matrix(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  drp::Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
  return a;
}

void bm_svd(benchmark::State& state) {
  const drp::Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(drp::svd_small(a));
}
BENCHMARK(bm_svd)->Arg(8)->Arg(16)->Arg(32);

void bm_gauss_legendre(benchmark::State& state) {
  for (auto _ : state) {
    auto rule = drp::gauss_legendre(static_cast<std::size_t>(state.range(0)),
                                    -std::numbers::pi / 2.0, std::numbers::pi / 2.0);
    benchmark::DoNotOptimize(rule);
  }
}
BENCHMARK(bm_gauss_legendre)->Arg(16)->Arg(64);

void bm_integrated_error(benchmark::State& state) {
  const drp::QuadratureSpec band = drp::default_band();
  const drp::SpatialTriple t = drp::closed_form_triple(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(drp::integrated_error(t, 1.0, band));
}
BENCHMARK(bm_integrated_error);

void bm_least_squares_stencil(benchmark::State& state) {
  const drp::QuadratureSpec band = drp::default_band();
  const drp::StencilSpec s = drp::make_stencil(
      static_cast<int>(state.range(0)), {{drp::ConstraintKind::antisymmetry}});
  for (auto _ : state) benchmark::DoNotOptimize(drp::least_squares_coefficients(s, band));
}
BENCHMARK(bm_least_squares_stencil)->Arg(1)->Arg(3);

void bm_step(benchmark::State& state) {
  const std::size_t n_x = static_cast<std::size_t>(state.range(0));
  drp::GridSpec g = drp::make_grid(1.0, 0.5, n_x, 2 * n_x, 1.0);
  drp::SchemeCoefficients coeffs = drp::preset_scheme("leapfrog-central", g);
  std::vector<double> prev(n_x + 1, 0.0), prev2(n_x + 1, 0.0);
  for (std::size_t i = 0; i <= n_x; ++i)
    prev[i] = std::sin(2.0 * std::numbers::pi * g.h * static_cast<double>(i));
  for (auto _ : state)
    benchmark::DoNotOptimize(drp::step(prev, &prev2, coeffs, 0.0, 0.0));
}
BENCHMARK(bm_step)->Arg(200)->Arg(1000);

void bm_analyze(benchmark::State& state) {
  drp::GridSpec g = drp::make_grid(1.0, 0.5, 12, 6, 1.0);
  drp::SchemeCoefficients coeffs = drp::preset_scheme("leapfrog-central", g);
  drp::InitialCondition ic = drp::sine_wave(2.0 * std::numbers::pi);
  for (auto _ : state) benchmark::DoNotOptimize(drp::analyze_instance(g, coeffs, ic));
}
BENCHMARK(bm_analyze);

} // namespace

BENCHMARK_MAIN();
