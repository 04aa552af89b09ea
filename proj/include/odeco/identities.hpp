#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "odeco/algebra.hpp"
#include "odeco/common.hpp"
#include "odeco/tensor.hpp"

namespace odeco {

enum class EvalMode { Exhaustive, Sampled };

std::string_view to_string(EvalMode m);

struct ResidualReport {
  std::string identity;
  double raw_max = 0.0;
  /// raw_max on the input rescaled to unit Frobenius norm.
  double normalized = 0.0;
  std::size_t tuples_evaluated = 0;
  EvalMode mode = EvalMode::Exhaustive;
  /// 0-based basis indices of the worst tuple (empty in sampled mode).
  std::vector<std::size_t> worst_tuple;
};

struct Decision {
  Scenario scenario = Scenario::Ordinary;
  Field field = Field::Real;
  double tolerance = 1e-8;
  std::vector<ResidualReport> residuals;
  std::vector<std::string> notes;
  bool accepted = true;
};

struct EvalOptions {
  /// Exhaustive basis enumeration while the tuple count stays at or below this.
  std::size_t tuple_budget = 1'000'000;
  std::size_t samples = 500;
  std::uint64_t seed = 0;
};

ResidualReport residual_associativity(const MulTable& m, const EvalOptions& opts = {});
ResidualReport residual_semi_associativity(const MulTable& m, const EvalOptions& opts = {});
ResidualReport residual_jacobi(const MulTable& m, const EvalOptions& opts = {});
ResidualReport residual_cross_first(const MulTable& m, const EvalOptions& opts = {});
ResidualReport residual_cross_second(const MulTable& m, const EvalOptions& opts = {});

ResidualReport residual_partial_associativity(const Tensor& t, const EvalOptions& opts = {});
ResidualReport residual_partial_semi_associativity(const Tensor& t, const EvalOptions& opts = {});
/// Component of t *_l t outside the pairwise-symmetric subspace, over ||t||^2.
/// A membership criterion over R only; complex input is evaluated as is.
ResidualReport residual_star_symmetry(const Tensor& t, std::size_t slot);
ResidualReport residual_casimir(const Tensor& t, const EvalOptions& opts = {});

/// [x, [[x, y], [x, z]]] on explicit vectors.
Vector evaluate_cross_first(const MulTable& m, const Vector& x, const Vector& y, const Vector& z);

/// Throws ScenarioError unless the tensor lies in the scenario's symmetry
/// class within `tolerance` (relative projector distance); returns the
/// projection onto that class.
Tensor check_scenario(const Tensor& t, Scenario scenario, double tolerance);

/// Order-3 membership test for the scenario's variety.
Decision decide(const Tensor& t, Scenario scenario, double tolerance = 1e-8, const EvalOptions& opts = {});

}  // namespace odeco
