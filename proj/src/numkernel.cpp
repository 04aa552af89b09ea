#include "odeco/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace odeco {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kEps = std::numeric_limits<double>::epsilon();

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

void check_field(const std::vector<cplx>& data, Field field) {
  if (field != Field::Real) return;
  for (const auto& v : data)
    if (v.imag() != 0.0) throw FieldError("real-tagged matrix has nonzero imaginary parts");
}

// Sort eigenpairs / singular triples by value, descending.
std::vector<std::size_t> descending_order(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  return order;
}

// Extends `basis` (orthonormal columns, some slots missing) so that every slot
// flagged in `missing` gets an orthonormal completion vector.
void complete_orthonormal(Matrix& basis, const std::vector<bool>& missing) {
  const std::size_t m = basis.rows();
  std::vector<Vector> accepted;
  for (std::size_t j = 0; j < basis.cols(); ++j)
    if (!missing[j]) accepted.push_back(basis.column(j));
  std::size_t candidate = 0;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    if (!missing[j]) continue;
    while (true) {
      if (candidate >= m) throw ConvergenceError("svd: cannot complete orthonormal basis");
      Vector v = basis_vector(m, candidate++);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : accepted) {
          const cplx r = dot(v, q);
          for (std::size_t k = 0; k < m; ++k) v[k] -= r * q[k];
        }
      const double nv = norm(v);
      if (nv > 0.5) {
        v = scaled(v, 1.0 / nv);
        basis.set_column(j, v);
        accepted.push_back(std::move(v));
        break;
      }
    }
  }
}

SvdResult svd_tall(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Matrix g = m;
  Matrix v = Matrix::identity(cols, m.field());
  const double normsq = std::pow(m.frobenius_norm(), 2);
  const double tol = std::max(1e-15, std::sqrt(static_cast<double>(rows)) * kEps);

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0.0, beta = 0.0;
        cplx gamma = 0.0;
        for (std::size_t k = 0; k < rows; ++k) {
          alpha += std::norm(g(k, p));
          beta += std::norm(g(k, q));
          gamma += std::conj(g(k, p)) * g(k, q);
        }
        const double ag = std::abs(gamma);
        if (ag <= tol * std::sqrt(alpha * beta) || ag <= 1e-30 * normsq) continue;
        rotated = true;
        const cplx phase_conj = std::conj(gamma / ag);
        const double zeta = (beta - alpha) / (2.0 * ag);
        const double t = sign_of(zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < rows; ++k) {
          const cplx gp = g(k, p);
          const cplx gq = g(k, q) * phase_conj;
          g(k, p) = c * gp - s * gq;
          g(k, q) = s * gp + c * gq;
        }
        for (std::size_t k = 0; k < cols; ++k) {
          const cplx vp = v(k, p);
          const cplx vq = v(k, q) * phase_conj;
          v(k, p) = c * vp - s * vq;
          v(k, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }
  if (sweep == kMaxSweeps) throw ConvergenceError("svd: one-sided Jacobi did not converge in 60 sweeps");

  std::vector<double> sigma(cols);
  for (std::size_t j = 0; j < cols; ++j) sigma[j] = norm(g.column(j));
  const auto order = descending_order(sigma);
  const double smax = cols ? sigma[order[0]] : 0.0;

  SvdResult out{Matrix(rows, cols, m.field()), std::vector<double>(cols), Matrix(cols, cols, m.field())};
  std::vector<bool> missing(cols, false);
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t src = order[j];
    out.singular_values[j] = sigma[src];
    out.v.set_column(j, v.column(src));
    if (smax > 0.0 && sigma[src] > 1e-15 * smax) {
      out.u.set_column(j, scaled(g.column(src), 1.0 / sigma[src]));
    } else {
      missing[j] = true;
    }
  }
  if (std::find(missing.begin(), missing.end(), true) != missing.end()) complete_orthonormal(out.u, missing);
  return out;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw ShapeError("Matrix: entries length != rows * cols");
  check_field(data_, field_);
}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix out(n, n, field);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, Field field) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  Matrix out(rows, columns.size(), field);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw ShapeError("Matrix::from_columns: ragged columns");
    if (field == Field::Real && has_imaginary(columns[j]))
      throw FieldError("Matrix::from_columns: complex column in a real matrix");
    out.set_column(j, columns[j]);
  }
  return out;
}

Vector Matrix::column(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  if (v.size() != rows_) throw ShapeError("Matrix::set_column: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
  const Field f = (a.field() == Field::Complex || b.field() == Field::Complex) ? Field::Complex : Field::Real;
  Matrix out(a.rows(), b.cols(), f);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix difference: shape mismatch");
  const Field f = (a.field() == Field::Complex || b.field() == Field::Complex) ? Field::Complex : Field::Real;
  std::vector<cplx> d(a.entries().size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.entries()[i] - b.entries()[i];
  return Matrix(a.rows(), a.cols(), std::move(d), f);
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw ShapeError("matrix-vector product: length mismatch");
  Vector out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

EigenResult eigh(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("eigh: matrix is not square");
  const std::size_t n = m.rows();
  const double mnorm = m.frobenius_norm();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > 1e-12 * mnorm)
        throw ScenarioError("eigh: matrix is not Hermitian");

  Matrix a(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  Matrix v = Matrix::identity(n, m.field());

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= 1e-14 * mnorm) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-16 * mnorm) continue;
        const cplx phase_conj = std::conj(apq / r);
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = sign_of(tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        // Rotation U restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
        const cplx upp = c, upq = s, uqp = -s * phase_conj, uqq = c * phase_conj;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }
  if (sweep == kMaxSweeps) throw ConvergenceError("eigh: Jacobi rotations did not converge in 60 sweeps");

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  const auto order = descending_order(diag);
  EigenResult out{std::vector<double>(n), Matrix(n, n, m.field())};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = diag[order[j]];
    out.vectors.set_column(j, v.column(order[j]));
  }
  return out;
}

SvdResult svd(const Matrix& m) {
  if (m.rows() >= m.cols()) return svd_tall(m);
  SvdResult t = svd_tall(m.adjoint());
  return SvdResult{std::move(t.v), std::move(t.singular_values), std::move(t.u)};
}

std::size_t numerical_rank(const std::vector<double>& singular_values, double rel_tol) {
  if (singular_values.empty()) return 0;
  const double smax = *std::max_element(singular_values.begin(), singular_values.end());
  if (smax <= 0.0) return 0;
  return static_cast<std::size_t>(std::count_if(singular_values.begin(), singular_values.end(),
                                                [&](double s) { return s > rel_tol * smax; }));
}

Matrix orthonormalize(const Matrix& columns) {
  const std::size_t rows = columns.rows();
  std::vector<Vector> q;
  q.reserve(columns.cols());
  for (std::size_t j = 0; j < columns.cols(); ++j) {
    Vector v = columns.column(j);
    const double original = norm(v);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& qi : q) {
        const cplx r = dot(v, qi);
        for (std::size_t k = 0; k < rows; ++k) v[k] -= r * qi[k];
      }
    const double nv = norm(v);
    if (original == 0.0 || nv <= 1e-10 * original) {
      const std::size_t rank = numerical_rank(svd(columns).singular_values, 1e-10);
      throw RankDeficientError("orthonormalize: columns are linearly dependent (numerical rank " +
                                   std::to_string(rank) + " of " + std::to_string(columns.cols()) + ")",
                               rank);
    }
    q.push_back(scaled(v, 1.0 / nv));
  }
  return Matrix::from_columns(q, columns.field());
}

}  // namespace odeco
