#pragma once

#include <cstdint>
#include <vector>

#include "odeco/common.hpp"
#include "odeco/tensor.hpp"

namespace odeco {

/// One summand. Ordinary: weight 1 and one vector per slot (the norm sits on
/// the first). Symmetric: weight and a single unit vector. Alternating: weight
/// and an orthonormal frame of d vectors; the summand is weight * wedge(frame).
struct DecompositionTerm {
  cplx weight = 1.0;
  std::vector<Vector> vectors;
};

struct Decomposition {
  Scenario scenario = Scenario::Ordinary;
  Field field = Field::Real;
  std::vector<std::size_t> dims;
  std::vector<DecompositionTerm> terms;

  Tensor term_tensor(std::size_t i) const;
  Tensor reconstruct() const;
};

struct VerifyReport {
  double reconstruction_error = 0.0;
  double max_orthogonality_defect = 0.0;
  std::size_t term_count = 0;
  bool ok = false;
};

struct DecomposeOptions {
  std::uint64_t seed = 0;
  int max_retries = 5;
  /// Singular/eigen values below rank_tol * largest count as zero.
  double rank_tol = 1e-8;
  /// Neighbouring values closer than separation * largest trigger a retry.
  double separation = 1e-6;
  /// Projector distance allowed for symmetric/alternating input.
  double scenario_tol = 1e-8;
};

Decomposition decompose_ordinary(const Tensor& t, const DecomposeOptions& opts = {});
Decomposition decompose_symmetric(const Tensor& t, const DecomposeOptions& opts = {});
Decomposition decompose_alternating(const Tensor& t, const DecomposeOptions& opts = {});
Decomposition decompose(const Tensor& t, Scenario scenario, const DecomposeOptions& opts = {});

VerifyReport verify(const Tensor& t, const Decomposition& d, double tolerance);

/// Multiplies x by a unit scalar so that its first coordinate with
/// |x_i| > 1e-8 ||x|| is real and positive.
void canonicalize_phase(Vector& x);

}  // namespace odeco
