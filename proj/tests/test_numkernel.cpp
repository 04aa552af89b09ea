#include <gtest/gtest.h>

#include "odeco/numkernel.hpp"
#include "oracle.hpp"

using namespace odeco;

namespace {

Matrix random_matrix(oracle::Gen& g, std::size_t r, std::size_t c, bool complex) {
  Matrix m(r, c, complex ? Field::Complex : Field::Real);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = g.scalar(complex);
  return m;
}

Matrix random_hermitian(oracle::Gen& g, std::size_t n, bool complex) {
  Matrix a = random_matrix(g, n, n, complex);
  Matrix h(n, n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

// sum_i lambda_i v_i v_i^*
Matrix from_eigen(const EigenResult& r) {
  const std::size_t n = r.vectors.rows();
  Matrix out(n, n, Field::Complex);
  for (std::size_t k = 0; k < r.values.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += r.values[k] * r.vectors(i, k) * std::conj(r.vectors(j, k));
  return out;
}

Matrix projector(const Matrix& q) {
  const std::size_t n = q.rows();
  Matrix p(n, n, Field::Complex);
  for (std::size_t k = 0; k < q.cols(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) += q(i, k) * std::conj(q(j, k));
  return p;
}

}  // namespace

TEST(Eigh, TwoByTwo) {
  Matrix m(2, 2, {2.0, 1.0, 1.0, 2.0}, Field::Real);
  const auto r = eigh(m);
  ASSERT_EQ(r.values.size(), 2u);
  EXPECT_NEAR(r.values[0], 3.0, 1e-14);
  EXPECT_NEAR(r.values[1], 1.0, 1e-14);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(r.vectors(0, 0) * s + r.vectors(1, 0) * s), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(r.vectors(0, 1) * s - r.vectors(1, 1) * s), 1.0, 1e-14);
}

TEST(Eigh, Identity) {
  const auto r = eigh(Matrix::identity(3));
  for (double v : r.values) EXPECT_NEAR(v, 1.0, 1e-15);
}

TEST(Eigh, RandomHermitianReconstructs) {
  oracle::Gen g(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix h = random_hermitian(g, 6, true);
    const auto r = eigh(h);
    EXPECT_LE(max_abs_diff(from_eigen(r), h), 1e-10 * h.frobenius_norm());
    EXPECT_TRUE(std::is_sorted(r.values.rbegin(), r.values.rend()));
    const Matrix qq = r.vectors.adjoint() * r.vectors;
    EXPECT_LE(max_abs_diff(qq, Matrix::identity(6)), 1e-12);
  }
}

TEST(Eigh, Errors) {
  EXPECT_THROW(eigh(Matrix(2, 3)), ShapeError);
  Matrix m(2, 2, {1.0, 2.0, 0.0, 1.0}, Field::Real);
  EXPECT_THROW(eigh(m), ScenarioError);
}

TEST(Svd, DiagonalAndSwap) {
  auto r = svd(Matrix(2, 2, {3.0, 0.0, 0.0, 2.0}, Field::Real));
  EXPECT_NEAR(r.singular_values[0], 3.0, 1e-15);
  EXPECT_NEAR(r.singular_values[1], 2.0, 1e-15);
  r = svd(Matrix(2, 2, {0.0, 1.0, 1.0, 0.0}, Field::Real));
  EXPECT_NEAR(r.singular_values[0], 1.0, 1e-15);
  EXPECT_NEAR(r.singular_values[1], 1.0, 1e-15);
}

TEST(Svd, RandomComplexReconstructs) {
  oracle::Gen g(12);
  for (auto [rows, cols] : {std::pair{4, 5}, std::pair{5, 4}, std::pair{1, 6}, std::pair{6, 6}}) {
    const Matrix m = random_matrix(g, rows, cols, true);
    const auto r = svd(m);
    Matrix us = r.u;
    for (std::size_t i = 0; i < us.rows(); ++i)
      for (std::size_t k = 0; k < us.cols(); ++k) us(i, k) *= r.singular_values[k];
    EXPECT_LE(max_abs_diff(us * r.v.adjoint(), m), 1e-10 * m.frobenius_norm()) << rows << "x" << cols;
  }
}

TEST(Svd, RankDeficientKeepsOrthonormalFactors) {
  // Rank one: columns of U beyond the first must still be orthonormal.
  Matrix m(3, 3, {1.0, 2.0, 3.0, 2.0, 4.0, 6.0, 3.0, 6.0, 9.0}, Field::Real);
  const auto r = svd(m);
  EXPECT_EQ(numerical_rank(r.singular_values, 1e-10), 1u);
  EXPECT_LE(max_abs_diff(r.u.adjoint() * r.u, Matrix::identity(3)), 1e-12);
}

TEST(Orthonormalize, AxisColumns) {
  const Matrix q = orthonormalize(Matrix(2, 2, {1.0, 1.0, 0.0, 1.0}, Field::Real));
  EXPECT_LE(max_abs_diff(q, Matrix::identity(2)), 1e-15);
}

TEST(Orthonormalize, OrthonormalInputUnchanged) {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix m(2, 2, {s, s, s, -s}, Field::Real);
  EXPECT_LE(max_abs_diff(orthonormalize(m), m), 1e-15);
}

TEST(Orthonormalize, RandomSpanPreserved) {
  oracle::Gen g(13);
  for (bool complex : {false, true}) {
    const Matrix m = random_matrix(g, 6, 3, complex);
    const Matrix q = orthonormalize(m);
    EXPECT_LE(max_abs_diff(q.adjoint() * q, Matrix::identity(3)), 1e-12);
    // Projector onto span(m) via the normal equations on the oracle side.
    const Matrix pq = projector(q);
    for (std::size_t j = 0; j < 3; ++j) {
      const Vector c = m.column(j);
      const Vector pc = pq * c;
      EXPECT_LE(oracle::dist(pc, c), 1e-12 * oracle::norm(c));
    }
  }
}

TEST(Orthonormalize, DependentColumnsReportRank) {
  Matrix m(3, 3, {1.0, 2.0, 0.0, 0.0, 0.0, 1.0, 1.0, 2.0, 0.0}, Field::Real);
  try {
    orthonormalize(m);
    FAIL() << "expected RankDeficientError";
  } catch (const RankDeficientError& e) {
    EXPECT_EQ(e.rank(), 2u);
  }
}

TEST(Matrix, RejectsImaginaryInRealMatrix) {
  EXPECT_THROW(Matrix(1, 1, {cplx(0.0, 1.0)}, Field::Real), FieldError);
}
