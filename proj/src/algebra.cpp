#include "odeco/algebra.hpp"

#include <cmath>

namespace odeco {

namespace {

double constants_norm(const std::vector<cplx>& c) {
  double s = 0.0;
  for (const auto& v : c) s += std::norm(v);
  return std::sqrt(s);
}

void require_order3_cubical(const Tensor& t, const char* what) {
  if (t.order() != 3) throw ShapeError(std::string(what) + ": order-3 tensor required");
  if (!t.is_cubical()) throw ShapeError(std::string(what) + ": equal dimensions required");
}

}  // namespace

MulTable make_table(std::size_t dim, Field field, std::vector<cplx> constants, bool semilinear, bool antisymmetric) {
  if (constants.size() != dim * dim * dim) throw ShapeError("make_table: expected dim^3 structure constants");
  if (field == Field::Real && has_imaginary(constants)) throw FieldError("make_table: real table with imaginary parts");
  MulTable m;
  m.dim = dim;
  m.field = field;
  m.constants = std::move(constants);
  m.semilinear = semilinear;
  m.antisymmetric = antisymmetric;
  m.source_norm = constants_norm(m.constants);
  return m;
}

MulTable table_from_tensor(const Tensor& c, bool semilinear, bool antisymmetric) {
  require_order3_cubical(c, "table_from_tensor");
  return make_table(c.dims()[0], c.field(), c.entries(), semilinear, antisymmetric);
}

std::size_t TriMulTable::offset(std::size_t block) const {
  if (block > 3) throw ShapeError("TriMulTable: block out of range");
  std::size_t off = 0;
  for (std::size_t b = 0; b < block; ++b) off += dims[b];
  return off;
}

MulTable induce_symmetric(const Tensor& t, double tolerance) {
  require_order3_cubical(t, "induce_symmetric");
  if (symmetric_defect(t) > tolerance) throw ScenarioError("induce_symmetric: tensor is not symmetric");
  MulTable m = table_from_tensor(t, t.field() == Field::Complex, false);
  m.source_norm = t.norm();
  return m;
}

MulTable induce_alternating(const Tensor& t, double tolerance) {
  require_order3_cubical(t, "induce_alternating");
  if (alternating_defect(t) > tolerance) throw ScenarioError("induce_alternating: tensor is not alternating");
  MulTable m = table_from_tensor(t, t.field() == Field::Complex, true);
  m.source_norm = t.norm();
  return m;
}

TriMulTable induce_ordinary(const Tensor& t) {
  if (t.order() != 3) throw ShapeError("induce_ordinary: order-3 tensor required");
  TriMulTable tri;
  tri.dims = {t.dims()[0], t.dims()[1], t.dims()[2]};
  const std::size_t n = tri.dims[0] + tri.dims[1] + tri.dims[2];
  MulTable& m = tri.table;
  m.dim = n;
  m.field = t.field();
  m.constants.assign(n * n * n, 0.0);
  m.semilinear = t.field() == Field::Complex;
  m.antisymmetric = false;
  m.source_norm = t.norm();
  const std::size_t ou = tri.offset(0), ov = tri.offset(1), ow = tri.offset(2);
  for (std::size_t i = 0; i < tri.dims[0]; ++i)
    for (std::size_t j = 0; j < tri.dims[1]; ++j)
      for (std::size_t k = 0; k < tri.dims[2]; ++k) {
        const std::size_t idx[3] = {i, j, k};
        const cplx v = t.at(idx);
        const std::size_t u = ou + i, w = ov + j, x = ow + k;
        // Symmetric embedding: every ordering of the three block coordinates.
        m.at(u, w, x) = v;
        m.at(w, u, x) = v;
        m.at(u, x, w) = v;
        m.at(x, u, w) = v;
        m.at(w, x, u) = v;
        m.at(x, w, u) = v;
      }
  return tri;
}

Vector apply(const MulTable& m, const Vector& x, const Vector& y) {
  if (x.size() != m.dim || y.size() != m.dim) throw ShapeError("apply: vector length != table dimension");
  const std::size_t n = m.dim;
  Vector out(n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    const cplx xa = m.semilinear ? std::conj(x[a]) : x[a];
    if (xa == 0.0) continue;
    for (std::size_t b = 0; b < n; ++b) {
      const cplx yb = m.semilinear ? std::conj(y[b]) : y[b];
      if (yb == 0.0) continue;
      const cplx s = xa * yb;
      const cplx* row = &m.constants[(a * n + b) * n];
      for (std::size_t c = 0; c < n; ++c) out[c] += s * row[c];
    }
  }
  return out;
}

SparseProduct::SparseProduct(const MulTable& m) : dim_(m.dim), semilinear_(m.semilinear) {
  const std::size_t n = m.dim;
  first_row_.reserve(n + 1);
  for (std::size_t a = 0; a < n; ++a) {
    first_row_.push_back(rows_.size());
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t begin = entries_.size();
      for (std::size_t c = 0; c < n; ++c)
        if (m.at(a, b, c) != 0.0) entries_.emplace_back(c, m.at(a, b, c));
      if (entries_.size() > begin) rows_.push_back({b, begin, entries_.size()});
    }
  }
  first_row_.push_back(rows_.size());
}

Vector SparseProduct::operator()(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw ShapeError("apply: vector length != table dimension");
  Vector out(dim_, 0.0);
  for (std::size_t a = 0; a < dim_; ++a) {
    const cplx xa = semilinear_ ? std::conj(x[a]) : x[a];
    if (xa == 0.0) continue;
    for (std::size_t r = first_row_[a]; r < first_row_[a + 1]; ++r) {
      const Row& row = rows_[r];
      const cplx yb = semilinear_ ? std::conj(y[row.b]) : y[row.b];
      if (yb == 0.0) continue;
      const cplx s = xa * yb;
      for (std::size_t e = row.begin; e < row.end; ++e) out[entries_[e].first] += s * entries_[e].second;
    }
  }
  return out;
}

double compatibility_defect(const MulTable& m) {
  double worst = 0.0;
  for (std::size_t a = 0; a < m.dim; ++a)
    for (std::size_t b = 0; b < m.dim; ++b)
      for (std::size_t c = 0; c < m.dim; ++c) worst = std::max(worst, std::abs(m.at(a, b, c) - m.at(c, a, b)));
  return worst;
}

Matrix casimir(const Tensor& t) {
  require_order3_cubical(t, "casimir");
  const std::size_t n = t.dims()[0];
  Matrix h(n, n, t.field());
  for (std::size_t ab = 0; ab < n * n; ++ab)
    for (std::size_t g = 0; g < n; ++g) {
      const cplx x = t[ab * n + g];
      if (x == 0.0) continue;
      for (std::size_t g2 = 0; g2 < n; ++g2) h(g, g2) += x * std::conj(t[ab * n + g2]);
    }
  return h;
}

MulTable cross_product_table(Field field) {
  std::vector<cplx> c(27, 0.0);
  auto set = [&](std::size_t a, std::size_t b, std::size_t k, double v) { c[(a * 3 + b) * 3 + k] = v; };
  set(0, 1, 2, 1.0);
  set(1, 0, 2, -1.0);
  set(1, 2, 0, 1.0);
  set(2, 1, 0, -1.0);
  set(2, 0, 1, 1.0);
  set(0, 2, 1, -1.0);
  return make_table(3, field, std::move(c), field == Field::Complex, true);
}

std::vector<Matrix> sl3_basis() {
  auto unit = [](std::size_t i, std::size_t j) {
    Matrix e(3, 3);
    e(i, j) = 1.0;
    return e;
  };
  std::vector<Matrix> basis{unit(0, 1), unit(0, 2), unit(1, 0), unit(1, 2), unit(2, 0), unit(2, 1)};
  basis.push_back(unit(0, 0) - unit(1, 1));
  basis.push_back(unit(1, 1) - unit(2, 2));
  return basis;
}

Vector sl3_coordinates(const Matrix& x) {
  if (x.rows() != 3 || x.cols() != 3) throw ShapeError("sl3_coordinates: 3x3 matrix required");
  const cplx trace = x(0, 0) + x(1, 1) + x(2, 2);
  if (std::abs(trace) > 1e-12 * std::max(1.0, x.frobenius_norm())) throw ShapeError("sl3_coordinates: matrix is not traceless");
  return {x(0, 1), x(0, 2), x(1, 0), x(1, 2), x(2, 0), x(2, 1), x(0, 0), -x(2, 2)};
}

Matrix sl3_matrix(const Vector& coordinates) {
  if (coordinates.size() != 8) throw ShapeError("sl3_matrix: 8 coordinates required");
  const auto basis = sl3_basis();
  Field f = has_imaginary(coordinates) ? Field::Complex : Field::Real;
  Matrix out(3, 3, f);
  for (std::size_t k = 0; k < 8; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) out(i, j) += coordinates[k] * basis[k](i, j);
  return out;
}

MulTable sl3_table() {
  const auto basis = sl3_basis();
  std::vector<cplx> c(8 * 8 * 8, 0.0);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const Matrix bracket = basis[a] * basis[b] - basis[b] * basis[a];
      const Vector coords = sl3_coordinates(bracket);
      for (std::size_t k = 0; k < 8; ++k) c[(a * 8 + b) * 8 + k] = coords[k];
    }
  return make_table(8, Field::Real, std::move(c), false, true);
}

}  // namespace odeco
