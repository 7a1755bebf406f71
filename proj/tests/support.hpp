#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "drp/matrix.hpp"

namespace drp::testing {

// Deterministic value source for property tests. Every test that draws
// random data goes through one of these with an explicit seed.
class Rng {
public:
  explicit Rng(std::uint32_t seed = 0) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_);
  }

  Matrix matrix(std::size_t rows, std::size_t cols, double lo = -1.0, double hi = 1.0) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }

  std::vector<double> vector(std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::vector<double> v(n);
    for (double& x : v) x = uniform(lo, hi);
    return v;
  }

  std::mt19937& raw() { return gen_; }

private:
  std::mt19937 gen_;
};

} // namespace drp::testing
