#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "odeco/common.hpp"
#include "odeco/numkernel.hpp"
#include "odeco/tensor.hpp"

namespace odeco {

/// Structure constants of a product on K^dim: e_a o e_b has c-coordinate
/// C[a][b][c]. A semilinear table conjugates both inputs before pairing.
struct MulTable {
  std::size_t dim = 0;
  Field field = Field::Real;
  std::vector<cplx> constants;  // dim^3, index (a * dim + b) * dim + c
  bool semilinear = false;
  bool antisymmetric = false;
  /// Scale used for normalized residuals: ||t|| when induced from a tensor,
  /// ||C|| for hand-entered tables.
  double source_norm = 0.0;

  cplx& at(std::size_t a, std::size_t b, std::size_t c) { return constants[(a * dim + b) * dim + c]; }
  const cplx& at(std::size_t a, std::size_t b, std::size_t c) const { return constants[(a * dim + b) * dim + c]; }
};

/// Wraps hand-entered constants. Sets source_norm to ||C||.
MulTable make_table(std::size_t dim, Field field, std::vector<cplx> constants, bool semilinear, bool antisymmetric);

/// Structure constants read directly from an order-3 cubical tensor.
MulTable table_from_tensor(const Tensor& c, bool semilinear, bool antisymmetric);

/// Product on U (+) V (+) W induced by an order-3 tensor. The embedded table
/// lives on the direct sum with coordinates ordered U, then V, then W.
struct TriMulTable {
  std::array<std::size_t, 3> dims{};
  MulTable table;

  std::size_t offset(std::size_t block) const;
};

MulTable induce_symmetric(const Tensor& t, double tolerance = 1e-10);
MulTable induce_alternating(const Tensor& t, double tolerance = 1e-10);
TriMulTable induce_ordinary(const Tensor& t);

/// x o y under the table's coordinate rule.
Vector apply(const MulTable& m, const Vector& x, const Vector& y);

/// Same product as apply(), over the nonzero structure constants only.
/// Holds a snapshot of the table; rebuild after editing the constants.
class SparseProduct {
 public:
  explicit SparseProduct(const MulTable& m);
  Vector operator()(const Vector& x, const Vector& y) const;

 private:
  struct Row {
    std::size_t b;
    std::size_t begin, end;  // into entries_
  };
  std::size_t dim_;
  bool semilinear_;
  std::vector<std::size_t> first_row_;  // dim + 1 offsets into rows_, by a
  std::vector<Row> rows_;
  std::vector<std::pair<std::size_t, cplx>> entries_;
};

/// max |C[a][b][c] - C[c][a][b]|, the basis form of (x o y | z) = (z o x | y).
double compatibility_defect(const MulTable& m);

/// H[g][g'] = sum_{a,b} t_{a b g} conj(t_{a b g'}).
Matrix casimir(const Tensor& t);

/// The cross product on R^3, or its semilinear extension to C^3.
MulTable cross_product_table(Field field);

/// sl_3 with basis E12, E13, E21, E23, E31, E32, E11-E22, E22-E33 and the
/// matrix commutator as bracket.
MulTable sl3_table();
std::vector<Matrix> sl3_basis();
/// Coordinates of a traceless 3x3 matrix in the sl_3 basis.
Vector sl3_coordinates(const Matrix& x);
Matrix sl3_matrix(const Vector& coordinates);

}  // namespace odeco
