#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "odeco/identities.hpp"
#include "odeco/tensor.hpp"

namespace odeco {

struct ReductionStep {
  /// One of: order3_decide, symmetric_as_ordinary, flattening_i,
  /// flattening_ii, flattening_iii, contraction_probe.
  std::string rule;
  /// Position in the recursion tree, e.g. "root/ii/i".
  std::string path;
  std::size_t depth = 0;
  std::vector<std::size_t> shape;
  bool accepted = true;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  /// Worst normalized residual per identity over every order-3 leaf.
  Decision final;
};

struct ReduceOptions {
  /// Probe vectors per alternating level; 0 means max(5, n).
  std::size_t probes = 0;
  std::uint64_t seed = 0;
  EvalOptions eval;
};

/// Partitions (i) ..., {d-2}, {d-1, d}; (ii) ..., {d-2, d-1}, {d}; (iii) ..., {d-2, d}, {d-1}
/// (1-based), each with singletons {1}..{d-3} in front.
std::array<SlotPartition, 3> flattening_partitions(std::size_t order);
std::array<Tensor, 3> flattening_triple(const Tensor& t);

/// Contraction of an alternating tensor with a unit vector in the last slot.
Tensor contraction_probe(const Tensor& s, const Vector& v);

ReductionTrace decide_higher_order(const Tensor& t, Scenario scenario, double tolerance = 1e-8,
                                   const ReduceOptions& opts = {});

}  // namespace odeco
