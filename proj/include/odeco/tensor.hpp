#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "odeco/common.hpp"
#include "odeco/numkernel.hpp"

namespace odeco {

/// Dense row-major tensor in V_1 (x) ... (x) V_d over R or C.
///
/// Storage is always complex; a real-tagged tensor has every imaginary part
/// exactly zero, which the constructors enforce. Order 0 (a scalar) is allowed
/// as the result of a full contraction.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::vector<std::size_t> dims, Field field);
  Tensor(std::vector<std::size_t> dims, std::vector<cplx> entries, Field field);

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t order() const noexcept { return dims_.size(); }
  std::size_t size() const noexcept { return data_.size(); }
  Field field() const noexcept { return field_; }
  const std::vector<cplx>& entries() const noexcept { return data_; }

  cplx& operator[](std::size_t flat) { return data_[flat]; }
  const cplx& operator[](std::size_t flat) const { return data_[flat]; }
  cplx& at(std::span<const std::size_t> index) { return data_[offset(index)]; }
  const cplx& at(std::span<const std::size_t> index) const { return data_[offset(index)]; }

  std::size_t offset(std::span<const std::size_t> index) const;
  std::vector<std::size_t> unravel(std::size_t flat) const;

  bool is_cubical() const;
  double norm() const;
  /// Same entries re-tagged; promoting to complex always succeeds, demoting
  /// to real requires zero imaginary parts.
  Tensor with_field(Field f) const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(cplx s);

 private:
  std::vector<std::size_t> dims_;
  Field field_ = Field::Real;
  std::vector<cplx> data_{0.0};
};

Tensor operator+(Tensor a, const Tensor& b);
Tensor operator-(Tensor a, const Tensor& b);
Tensor operator*(cplx s, Tensor a);

/// Ordered disjoint slot blocks covering {0..d-1}; each block ascending.
struct SlotPartition {
  std::vector<std::vector<std::size_t>> blocks;

  void validate(std::size_t order) const;
  static SlotPartition singletons(std::size_t order);
};

/// v_1 (x) v_2 (x) ... (x) v_d.
Tensor outer(const std::vector<Vector>& vectors, Field field);

/// (s|t) = sum_I s_I conj(t_I).
cplx inner(const Tensor& s, const Tensor& t);

/// Un-normalized alternating product: sum over S_d of sgn(pi) v_pi(1) (x) ... (x) v_pi(d).
Tensor wedge(const std::vector<Vector>& vectors, Field field);

/// Pairs slot `slot` with conj(a); the result has order d-1.
Tensor contract(const Tensor& t, std::size_t slot, const Vector& a);

/// Pairs the listed slots (in the listed order) against conj(s). Remaining
/// slots keep their relative order.
Tensor contract_block(const Tensor& t, std::span<const std::size_t> slots, const Tensor& s);

/// Result slot k is source slot perm[k].
Tensor permute_slots(const Tensor& t, std::span<const std::size_t> perm);

/// Regroups slots by the partition; block k becomes slot k with row-major
/// combined index. An isometry.
Tensor flatten(const Tensor& t, const SlotPartition& p);

/// Matrix of shape dims[slot] x (product of the other dims), other slots in order.
Matrix mode_matrix(const Tensor& t, std::size_t slot);

/// Two copies of t paired over `slot` (second copy conjugated), regrouped so
/// the result slots read (a_j, b_j) for each j != slot in order.
Tensor star_contract(const Tensor& t, std::size_t slot);

Tensor project_symmetric(const Tensor& t);
Tensor project_alternating(const Tensor& t);

/// ||t - P t|| / ||t|| for the symmetric / alternating projector (0 for t = 0).
double symmetric_defect(const Tensor& t);
double alternating_defect(const Tensor& t);

/// (Q_1 (x) ... (x) Q_d) t, one square matrix per slot.
Tensor transform_slots(const Tensor& t, const std::vector<Matrix>& mats);

/// All permutations of {0..d-1} with their signs, lexicographic order.
struct SignedPermutation {
  std::vector<std::size_t> perm;
  int sign;
};
std::vector<SignedPermutation> all_permutations(std::size_t d);

}  // namespace odeco
