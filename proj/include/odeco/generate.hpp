#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "odeco/common.hpp"
#include "odeco/decompose.hpp"
#include "odeco/numkernel.hpp"
#include "odeco/random.hpp"
#include "odeco/tensor.hpp"

namespace odeco {

enum class WeightPolicy { DistinctMagnitude, Equal, Explicit };

std::string_view to_string(WeightPolicy p);
WeightPolicy parse_weight_policy(std::string_view s);

struct SampleSpec {
  Scenario scenario = Scenario::Symmetric;
  Field field = Field::Real;
  /// Slot dimensions; symmetric and alternating use d copies of n.
  std::vector<std::size_t> dims;
  std::size_t k = 1;
  WeightPolicy weight_policy = WeightPolicy::DistinctMagnitude;
  std::vector<cplx> weights;  // used by WeightPolicy::Explicit
  std::uint64_t seed = 0;
};

struct GroundTruth {
  Tensor tensor;
  Decomposition decomposition;
};

/// Haar-distributed n x n orthogonal (real) or unitary (complex) matrix.
Matrix random_isometry(std::size_t n, Field field, Rng& rng);
Matrix random_isometry(std::size_t n, Field field, std::uint64_t seed);

/// Largest admissible term count for the shape.
std::size_t max_terms(Scenario scenario, const std::vector<std::size_t>& dims);

GroundTruth sample(const SampleSpec& spec);

/// t + epsilon * ||t|| * (unit Gaussian tensor projected to the scenario's class).
Tensor perturb(const GroundTruth& g, double epsilon, std::uint64_t seed);

/// Real dimension of the variety of decomposable tensors of this shape.
/// Ordinary shapes must be listed in ascending order.
long long variety_dimension(Scenario scenario, Field field, const std::vector<std::size_t>& dims);

/// Numerical rank of the finite-difference Jacobian of the sampling
/// parametrization at a random point with the maximal number of terms.
std::size_t estimate_dimension(Scenario scenario, Field field, const std::vector<std::size_t>& dims,
                               std::uint64_t seed);

}  // namespace odeco
