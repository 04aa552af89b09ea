#include "odeco/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace odeco {

namespace {

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
  return s;
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* what) {
  if (a.dims() != b.dims()) throw ShapeError(std::string(what) + ": shape mismatch");
}

Field join(Field a, Field b) { return (a == Field::Complex || b == Field::Complex) ? Field::Complex : Field::Real; }

void require_compatible(const Tensor& t, const Vector& a, const char* what) {
  if (t.field() == Field::Real && has_imaginary(a))
    throw FieldError(std::string(what) + ": complex vector paired with a real tensor");
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> dims, Field field)
    : dims_(std::move(dims)), field_(field), data_(product(dims_), 0.0) {
  for (auto n : dims_)
    if (n == 0) throw ShapeError("Tensor: dimensions must be positive");
}

Tensor::Tensor(std::vector<std::size_t> dims, std::vector<cplx> entries, Field field)
    : dims_(std::move(dims)), field_(field), data_(std::move(entries)) {
  for (auto n : dims_)
    if (n == 0) throw ShapeError("Tensor: dimensions must be positive");
  if (data_.size() != product(dims_)) throw ShapeError("Tensor: entries length != product of dims");
  if (field_ == Field::Real && has_imaginary(data_))
    throw FieldError("Tensor: real-tagged tensor has nonzero imaginary parts");
}

std::size_t Tensor::offset(std::span<const std::size_t> index) const {
  if (index.size() != dims_.size()) throw ShapeError("Tensor: index arity != order");
  std::size_t off = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (index[k] >= dims_[k]) throw ShapeError("Tensor: index out of range");
    off = off * dims_[k] + index[k];
  }
  return off;
}

std::vector<std::size_t> Tensor::unravel(std::size_t flat) const {
  std::vector<std::size_t> idx(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    idx[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return idx;
}

bool Tensor::is_cubical() const {
  return std::all_of(dims_.begin(), dims_.end(), [&](std::size_t n) { return n == dims_.front(); });
}

double Tensor::norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

Tensor Tensor::with_field(Field f) const { return Tensor(dims_, data_, f); }

Tensor& Tensor::operator+=(const Tensor& o) {
  require_same_shape(*this, o, "operator+=");
  field_ = join(field_, o.field_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  require_same_shape(*this, o, "operator-=");
  field_ = join(field_, o.field_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(cplx s) {
  if (s.imag() != 0.0) field_ = Field::Complex;
  for (auto& v : data_) v *= s;
  return *this;
}

Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
Tensor operator*(cplx s, Tensor a) { return a *= s; }

void SlotPartition::validate(std::size_t order) const {
  std::vector<bool> seen(order, false);
  for (const auto& block : blocks) {
    if (block.empty()) throw ShapeError("SlotPartition: empty block");
    for (std::size_t i = 0; i < block.size(); ++i) {
      const std::size_t s = block[i];
      if (s >= order) throw ShapeError("SlotPartition: slot out of range");
      if (seen[s]) throw ShapeError("SlotPartition: slot listed twice");
      if (i > 0 && block[i - 1] > s) throw ShapeError("SlotPartition: block not ascending");
      seen[s] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw ShapeError("SlotPartition: blocks do not cover every slot");
}

SlotPartition SlotPartition::singletons(std::size_t order) {
  SlotPartition p;
  for (std::size_t s = 0; s < order; ++s) p.blocks.push_back({s});
  return p;
}

Tensor outer(const std::vector<Vector>& vectors, Field field) {
  std::vector<std::size_t> dims;
  for (const auto& v : vectors) {
    if (field == Field::Real && has_imaginary(v)) throw FieldError("outer: complex vector for a real tensor");
    dims.push_back(v.size());
  }
  Tensor out(dims, field);
  std::vector<cplx> acc{1.0};
  for (const auto& v : vectors) {
    std::vector<cplx> next;
    next.reserve(acc.size() * v.size());
    for (const auto& a : acc)
      for (const auto& x : v) next.push_back(a * x);
    acc = std::move(next);
  }
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = acc[i];
  return out;
}

cplx inner(const Tensor& s, const Tensor& t) {
  require_same_shape(s, t, "inner");
  if (s.field() != t.field()) throw FieldError("inner: field mismatch");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) acc += s[i] * std::conj(t[i]);
  return acc;
}

std::vector<SignedPermutation> all_permutations(std::size_t d) {
  std::vector<SignedPermutation> out;
  std::vector<std::size_t> p(d);
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (p[i] > p[j]) ++inversions;
    out.push_back({p, inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Tensor wedge(const std::vector<Vector>& vectors, Field field) {
  if (vectors.empty()) throw ShapeError("wedge: no vectors");
  const std::size_t n = vectors.front().size();
  const std::size_t d = vectors.size();
  for (const auto& v : vectors) {
    if (v.size() != n) throw ShapeError("wedge: vectors of different lengths");
    if (field == Field::Real && has_imaginary(v)) throw FieldError("wedge: mixed fields");
  }
  if (d > n) throw ShapeError("wedge: more vectors than the dimension");
  Tensor out(std::vector<std::size_t>(d, n), field);
  for (const auto& [perm, sign] : all_permutations(d)) {
    std::vector<Vector> ordered;
    for (auto i : perm) ordered.push_back(vectors[i]);
    Tensor term = outer(ordered, field);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += static_cast<double>(sign) * term[i];
  }
  return out;
}

Tensor contract(const Tensor& t, std::size_t slot, const Vector& a) {
  if (slot >= t.order()) throw ShapeError("contract: slot out of range");
  if (a.size() != t.dims()[slot]) throw ShapeError("contract: vector length != slot dimension");
  require_compatible(t, a, "contract");
  const auto& dims = t.dims();
  const std::size_t outer_n = product(std::span(dims).first(slot));
  const std::size_t inner_n = product(std::span(dims).subspan(slot + 1));
  const std::size_t n = dims[slot];
  std::vector<std::size_t> out_dims(dims);
  out_dims.erase(out_dims.begin() + static_cast<std::ptrdiff_t>(slot));
  Tensor out(out_dims, t.field());
  for (std::size_t o = 0; o < outer_n; ++o)
    for (std::size_t i = 0; i < n; ++i) {
      const cplx ca = std::conj(a[i]);
      if (ca == 0.0) continue;
      const std::size_t base = (o * n + i) * inner_n;
      for (std::size_t r = 0; r < inner_n; ++r) out[o * inner_n + r] += t[base + r] * ca;
    }
  return out;
}

Tensor permute_slots(const Tensor& t, std::span<const std::size_t> perm) {
  const std::size_t d = t.order();
  if (perm.size() != d) throw ShapeError("permute_slots: permutation arity != order");
  std::vector<bool> seen(d, false);
  for (auto p : perm) {
    if (p >= d || seen[p]) throw ShapeError("permute_slots: not a permutation");
    seen[p] = true;
  }
  const auto src_strides = strides_of(t.dims());
  std::vector<std::size_t> out_dims(d), step(d);
  for (std::size_t k = 0; k < d; ++k) {
    out_dims[k] = t.dims()[perm[k]];
    step[k] = src_strides[perm[k]];
  }
  Tensor out(out_dims, t.field());
  std::vector<std::size_t> idx(d, 0);
  std::size_t src = 0;
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    out[flat] = t[src];
    for (std::size_t k = d; k-- > 0;) {
      if (++idx[k] < out_dims[k]) {
        src += step[k];
        break;
      }
      src -= step[k] * (out_dims[k] - 1);
      idx[k] = 0;
    }
  }
  return out;
}

Tensor contract_block(const Tensor& t, std::span<const std::size_t> slots, const Tensor& s) {
  const std::size_t d = t.order();
  if (s.order() != slots.size()) throw ShapeError("contract_block: slot list does not match the order of s");
  std::vector<bool> listed(d, false);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (slots[k] >= d || listed[slots[k]]) throw ShapeError("contract_block: invalid slot list");
    if (s.dims()[k] != t.dims()[slots[k]]) throw ShapeError("contract_block: dimension mismatch");
    listed[slots[k]] = true;
  }
  if (t.field() == Field::Real && has_imaginary(s.entries()))
    throw FieldError("contract_block: complex tensor paired with a real tensor");
  std::vector<std::size_t> perm, rest_dims;
  for (std::size_t k = 0; k < d; ++k)
    if (!listed[k]) {
      perm.push_back(k);
      rest_dims.push_back(t.dims()[k]);
    }
  perm.insert(perm.end(), slots.begin(), slots.end());
  const Tensor p = permute_slots(t, perm);
  const std::size_t block = s.size();
  Tensor out(rest_dims, t.field());
  for (std::size_t r = 0; r < out.size(); ++r) {
    cplx acc = 0.0;
    for (std::size_t b = 0; b < block; ++b) acc += p[r * block + b] * std::conj(s[b]);
    out[r] = acc;
  }
  return out;
}

Tensor flatten(const Tensor& t, const SlotPartition& p) {
  p.validate(t.order());
  std::vector<std::size_t> perm, dims;
  for (const auto& block : p.blocks) {
    std::size_t n = 1;
    for (auto s : block) {
      perm.push_back(s);
      n *= t.dims()[s];
    }
    dims.push_back(n);
  }
  const Tensor permuted = permute_slots(t, perm);
  return Tensor(dims, permuted.entries(), t.field());
}

Matrix mode_matrix(const Tensor& t, std::size_t slot) {
  if (slot >= t.order()) throw ShapeError("mode_matrix: slot out of range");
  std::vector<std::size_t> perm{slot};
  for (std::size_t k = 0; k < t.order(); ++k)
    if (k != slot) perm.push_back(k);
  const Tensor p = permute_slots(t, perm);
  const std::size_t rows = t.dims()[slot];
  return Matrix(rows, t.size() / rows, p.entries(), t.field());
}

Tensor star_contract(const Tensor& t, std::size_t slot) {
  if (slot >= t.order()) throw ShapeError("star_contract: slot out of range");
  const Matrix x = mode_matrix(t, slot);
  const std::size_t rest = x.cols();
  std::vector<std::size_t> rest_dims;
  for (std::size_t k = 0; k < t.order(); ++k)
    if (k != slot) rest_dims.push_back(t.dims()[k]);
  // gram[a][b] = sum_i x[i][a] conj(x[i][b]), laid out as (a_1..a_m, b_1..b_m).
  std::vector<cplx> gram(rest * rest, 0.0);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t a = 0; a < rest; ++a) {
      const cplx xa = x(i, a);
      if (xa == 0.0) continue;
      for (std::size_t b = 0; b < rest; ++b) gram[a * rest + b] += xa * std::conj(x(i, b));
    }
  std::vector<std::size_t> dims(rest_dims);
  dims.insert(dims.end(), rest_dims.begin(), rest_dims.end());
  const Tensor g(dims, std::move(gram), t.field());
  const std::size_t m = rest_dims.size();
  std::vector<std::size_t> interleave;
  for (std::size_t j = 0; j < m; ++j) {
    interleave.push_back(j);
    interleave.push_back(m + j);
  }
  return permute_slots(g, interleave);
}

namespace {

Tensor signed_average(const Tensor& t, bool alternating) {
  if (!t.is_cubical()) throw ShapeError("projection requires equal dimensions in every slot");
  Tensor out(t.dims(), t.field());
  const auto perms = all_permutations(t.order());
  for (const auto& [perm, sign] : perms) {
    const Tensor p = permute_slots(t, perm);
    const double w = alternating ? static_cast<double>(sign) : 1.0;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += w * p[i];
  }
  out *= 1.0 / static_cast<double>(perms.size());
  return out;
}

double relative_defect(const Tensor& t, const Tensor& projected) {
  const double nt = t.norm();
  if (nt == 0.0) return 0.0;
  return (t - projected).norm() / nt;
}

}  // namespace

Tensor project_symmetric(const Tensor& t) { return signed_average(t, false); }
Tensor project_alternating(const Tensor& t) { return signed_average(t, true); }

double symmetric_defect(const Tensor& t) { return relative_defect(t, project_symmetric(t)); }
double alternating_defect(const Tensor& t) { return relative_defect(t, project_alternating(t)); }

Tensor transform_slots(const Tensor& t, const std::vector<Matrix>& mats) {
  if (mats.size() != t.order()) throw ShapeError("transform_slots: one matrix per slot required");
  Tensor cur = t;
  Field field = t.field();
  for (std::size_t slot = 0; slot < mats.size(); ++slot) {
    const Matrix& q = mats[slot];
    const std::size_t n = cur.dims()[slot];
    if (q.rows() != n || q.cols() != n) throw ShapeError("transform_slots: matrix does not fit the slot");
    if (q.field() == Field::Complex) field = Field::Complex;
    const auto& dims = cur.dims();
    const std::size_t outer_n = product(std::span(dims).first(slot));
    const std::size_t inner_n = product(std::span(dims).subspan(slot + 1));
    Tensor next(dims, field);
    for (std::size_t o = 0; o < outer_n; ++o)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          const cplx qik = q(i, k);
          if (qik == 0.0) continue;
          const std::size_t src = (o * n + k) * inner_n;
          const std::size_t dst = (o * n + i) * inner_n;
          for (std::size_t r = 0; r < inner_n; ++r) next[dst + r] += qik * cur[src + r];
        }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace odeco
