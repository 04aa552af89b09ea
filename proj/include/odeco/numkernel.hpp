#pragma once

#include <cstddef>
#include <vector>

#include "odeco/common.hpp"

namespace odeco {

/// Dense row-major matrix of complex doubles tagged with its field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::Real);
  Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries, Field field);

  static Matrix identity(std::size_t n, Field field = Field::Real);
  /// Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(const std::vector<Vector>& columns, Field field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }
  const std::vector<cplx>& entries() const noexcept { return data_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);

  /// Conjugate transpose.
  Matrix adjoint() const;
  double frobenius_norm() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::Real;
  std::vector<cplx> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

struct EigenResult {
  std::vector<double> values;  // descending
  Matrix vectors;              // unit eigenvectors as columns
};

struct SvdResult {
  Matrix u;                             // rows x min(rows, cols)
  std::vector<double> singular_values;  // descending, nonnegative
  Matrix v;                             // cols x min(rows, cols)
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Throws ShapeError for non-square input, ScenarioError when M is not Hermitian
/// to 1e-12 relative, and ConvergenceError after 60 sweeps.
EigenResult eigh(const Matrix& m);

/// Thin SVD M = U diag(s) V* by one-sided (Hestenes) Jacobi.
SvdResult svd(const Matrix& m);

/// Orthonormal basis of the column span, by modified Gram-Schmidt with one
/// reorthogonalization pass. The implied R factor has a positive real diagonal.
/// Throws RankDeficientError (carrying the numerical rank) when a column falls
/// below 1e-10 of its original norm after projection.
Matrix orthonormalize(const Matrix& columns);

/// Count of singular values above rel_tol * largest.
std::size_t numerical_rank(const std::vector<double>& singular_values, double rel_tol);

}  // namespace odeco
