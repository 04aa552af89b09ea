#pragma once

#include <cstdint>
#include <random>

#include "odeco/common.hpp"

namespace odeco {

/// Seeded Gaussian source. Complex draws are standard circular normals
/// (real and imaginary parts each N(0, 1/2)).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  cplx gaussian(Field field);
  Vector gaussian_vector(std::size_t n, Field field);
  /// Uniformly distributed point on the unit sphere of K^n.
  Vector unit_vector(std::size_t n, Field field);
  /// Unit-modulus scalar: a random sign over R, a random phase over C.
  cplx unit_scalar(Field field);
  std::uint64_t next_seed() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace odeco
