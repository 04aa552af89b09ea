#include "odeco/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "odeco/identities.hpp"
#include "odeco/numkernel.hpp"
#include "odeco/random.hpp"

namespace odeco {

namespace {

double factorial(std::size_t d) {
  double f = 1.0;
  for (std::size_t i = 2; i <= d; ++i) f *= static_cast<double>(i);
  return f;
}

// True when two neighbouring values among the first k are too close to be
// told apart by the SVD.
bool has_collision(const std::vector<double>& values, std::size_t k, double separation) {
  if (values.empty()) return false;
  const double top = values.front();
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (values[i] - values[i + 1] < separation * top) return true;
  return false;
}

Vector leading_left_vector(const Matrix& m) {
  const SvdResult s = svd(m);
  Vector v = s.u.column(0);
  canonicalize_phase(v);
  return v;
}

Tensor gaussian_tensor(const std::vector<std::size_t>& dims, Field field, Rng& rng) {
  Tensor s(dims, field);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = rng.gaussian(field);
  return s;
}

// Left singular vectors of the two-slot matrix obtained by pairing slots 3..d
// with a Gaussian tensor; retried until the leading k values separate.
std::vector<Vector> separated_left_vectors(const Tensor& t, const DecomposeOptions& opts, Rng& rng) {
  std::vector<std::size_t> rest_slots, rest_dims;
  for (std::size_t k = 2; k < t.order(); ++k) {
    rest_slots.push_back(k);
    rest_dims.push_back(t.dims()[k]);
  }
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
    const Tensor s = gaussian_tensor(rest_dims, t.field(), rng);
    const Tensor two = contract_block(t, rest_slots, s);
    const Matrix m(two.dims()[0], two.dims()[1], two.entries(), t.field());
    const SvdResult r = svd(m);
    if (r.singular_values.empty() || r.singular_values.front() == 0.0) continue;
    const std::size_t k = numerical_rank(r.singular_values, opts.rank_tol);
    if (has_collision(r.singular_values, k, opts.separation)) continue;
    std::vector<Vector> out;
    for (std::size_t i = 0; i < k; ++i) {
      Vector u = r.u.column(i);
      canonicalize_phase(u);
      out.push_back(std::move(u));
    }
    return out;
  }
  throw DegenerateError("decompose: singular values stayed inseparable after every retry");
}

}  // namespace

void canonicalize_phase(Vector& x) {
  const double nx = norm(x);
  if (nx == 0.0) return;
  for (std::size_t p = 0; p < x.size(); ++p) {
    const double mag = std::abs(x[p]);
    if (mag > 1e-8 * nx) {
      const cplx phase = std::conj(x[p]) / mag;
      for (auto& y : x) y *= phase;
      x[p] = mag;
      return;
    }
  }
}

Tensor Decomposition::term_tensor(std::size_t i) const {
  const DecompositionTerm& term = terms.at(i);
  switch (scenario) {
    case Scenario::Ordinary: {
      Tensor out = outer(term.vectors, field);
      if (term.weight != 1.0) out *= term.weight;
      return out;
    }
    case Scenario::Symmetric: {
      Tensor out = outer(std::vector<Vector>(dims.size(), term.vectors.at(0)), field);
      out *= term.weight;
      return out;
    }
    case Scenario::Alternating: {
      Tensor out = wedge(term.vectors, field);
      out *= term.weight;
      return out;
    }
  }
  return {};
}

Tensor Decomposition::reconstruct() const {
  Tensor out(dims, field);
  for (std::size_t i = 0; i < terms.size(); ++i) out += term_tensor(i);
  return out;
}

Decomposition decompose_ordinary(const Tensor& t, const DecomposeOptions& opts) {
  if (t.order() < 3) throw ShapeError("decompose: order >= 3 required");
  Decomposition d;
  d.scenario = Scenario::Ordinary;
  d.field = t.field();
  d.dims = t.dims();
  if (t.norm() == 0.0) return d;
  Rng rng(opts.seed);
  for (const Vector& u : separated_left_vectors(t, opts, rng)) {
    const Tensor rest = contract(t, 0, u);
    std::vector<Vector> factors;
    for (std::size_t j = 0; j < rest.order(); ++j) factors.push_back(leading_left_vector(mode_matrix(rest, j)));
    const cplx c = inner(rest, outer(factors, t.field()));
    DecompositionTerm term;
    term.vectors.push_back(scaled(u, c));
    if (t.field() == Field::Real)
      for (auto& x : term.vectors.front()) x = x.real();
    term.vectors.insert(term.vectors.end(), factors.begin(), factors.end());
    d.terms.push_back(std::move(term));
  }
  std::stable_sort(d.terms.begin(), d.terms.end(), [](const DecompositionTerm& a, const DecompositionTerm& b) {
    return norm(a.vectors.front()) > norm(b.vectors.front());
  });
  return d;
}

Decomposition decompose_symmetric(const Tensor& t, const DecomposeOptions& opts) {
  if (t.order() < 3) throw ShapeError("decompose: order >= 3 required");
  const Tensor s = check_scenario(t, Scenario::Symmetric, opts.scenario_tol);
  Decomposition d;
  d.scenario = Scenario::Symmetric;
  d.field = t.field();
  d.dims = t.dims();
  if (s.norm() == 0.0) return d;
  Rng rng(opts.seed);
  for (Vector v : separated_left_vectors(s, opts, rng)) {
    const cplx w = inner(s, outer(std::vector<Vector>(s.order(), v), s.field()));
    DecompositionTerm term;
    term.weight = t.field() == Field::Real ? cplx(w.real(), 0.0) : w;
    term.vectors.push_back(std::move(v));
    d.terms.push_back(std::move(term));
  }
  std::stable_sort(d.terms.begin(), d.terms.end(), [](const DecompositionTerm& a, const DecompositionTerm& b) {
    return std::abs(a.weight) > std::abs(b.weight);
  });
  return d;
}

Decomposition decompose_alternating(const Tensor& t, const DecomposeOptions& opts) {
  const std::size_t order = t.order();
  if (order < 3) throw ShapeError("decompose: order >= 3 required");
  const Tensor s = check_scenario(t, Scenario::Alternating, opts.scenario_tol);
  Decomposition d;
  d.scenario = Scenario::Alternating;
  d.field = t.field();
  d.dims = t.dims();
  const std::size_t n = t.dims()[0];
  if (s.norm() == 0.0 || order > n) return d;
  const Field field = t.field();
  Rng rng(opts.seed);

  std::vector<Vector> plane_vectors;
  bool separated = false;
  for (int attempt = 0; attempt <= opts.max_retries && !separated; ++attempt) {
    Tensor m2 = s;
    while (m2.order() > 2) m2 = contract(m2, m2.order() - 1, rng.gaussian_vector(n, field));
    const Matrix m(n, n, m2.entries(), field);
    const SvdResult e = svd(m);
    const std::vector<double>& values = e.singular_values;
    if (values.front() == 0.0) continue;
    const std::size_t k = numerical_rank(values, opts.rank_tol);
    if (k % 2 != 0) throw NotDecomposableError("decompose: contracted matrix has odd rank");
    // Singular values of the skew matrix come in equal pairs, one pair per
    // term; distinct pairs must separate.
    bool collision = false;
    for (std::size_t p = 1; p + 1 < k; p += 2)
      if (values[p] - values[p + 1] < opts.separation * values.front()) collision = true;
    if (collision) continue;
    plane_vectors.clear();
    for (std::size_t p = 0; p < k; p += 2) plane_vectors.push_back(e.u.column(p));
    separated = true;
  }
  if (!separated) throw DegenerateError("decompose: invariant planes stayed inseparable after every retry");

  const double dfact = factorial(order);
  for (Vector a : plane_vectors) {
    canonicalize_phase(a);
    const Tensor rest = contract(s, order - 1, a);
    const SvdResult r = svd(mode_matrix(rest, 0));
    const std::size_t rank = numerical_rank(r.singular_values, opts.rank_tol);
    if (rank != order - 1)
      throw NotDecomposableError("decompose: recovered subspace has dimension " + std::to_string(rank + 1) +
                                 " instead of " + std::to_string(order));
    std::vector<Vector> cols{a};
    for (std::size_t j = 0; j < rank; ++j) cols.push_back(r.u.column(j));
    const Matrix frame = orthonormalize(Matrix::from_columns(cols, field));
    DecompositionTerm term;
    for (std::size_t j = 0; j < order; ++j) {
      Vector c = frame.column(j);
      canonicalize_phase(c);
      if (field == Field::Real)
        for (auto& x : c) x = x.real();
      term.vectors.push_back(std::move(c));
    }
    const cplx w = inner(s, wedge(term.vectors, field)) / dfact;
    term.weight = field == Field::Real ? cplx(w.real(), 0.0) : w;
    d.terms.push_back(std::move(term));
  }
  std::stable_sort(d.terms.begin(), d.terms.end(), [](const DecompositionTerm& a, const DecompositionTerm& b) {
    return std::abs(a.weight) > std::abs(b.weight);
  });
  return d;
}

Decomposition decompose(const Tensor& t, Scenario scenario, const DecomposeOptions& opts) {
  switch (scenario) {
    case Scenario::Ordinary: return decompose_ordinary(t, opts);
    case Scenario::Symmetric: return decompose_symmetric(t, opts);
    case Scenario::Alternating: return decompose_alternating(t, opts);
  }
  return decompose_ordinary(t, opts);
}

VerifyReport verify(const Tensor& t, const Decomposition& d, double tolerance) {
  if (t.dims() != d.dims) throw ShapeError("verify: decomposition shape differs from the tensor");
  VerifyReport rep;
  rep.term_count = d.terms.size();
  const Tensor diff = t - d.reconstruct();
  const double nt = t.norm();
  rep.reconstruction_error = nt > 0.0 ? diff.norm() / nt : diff.norm();

  double defect = 0.0;
  const auto& terms = d.terms;
  if (d.scenario == Scenario::Alternating) {
    std::vector<Matrix> frames;
    for (const auto& term : terms) frames.push_back(Matrix::from_columns(term.vectors, d.field));
    for (std::size_t i = 0; i < frames.size(); ++i) {
      const Matrix gram = frames[i].adjoint() * frames[i];
      defect = std::max(defect, (gram - Matrix::identity(gram.rows(), d.field)).frobenius_norm());
      for (std::size_t m = i + 1; m < frames.size(); ++m)
        defect = std::max(defect, (frames[i].adjoint() * frames[m]).frobenius_norm());
    }
  } else {
    for (std::size_t i = 0; i < terms.size(); ++i)
      for (std::size_t m = i + 1; m < terms.size(); ++m)
        for (std::size_t j = 0; j < terms[i].vectors.size(); ++j) {
          const Vector& a = terms[i].vectors[j];
          const Vector& b = terms[m].vectors[j];
          const double na = norm(a), nb = norm(b);
          if (na == 0.0 || nb == 0.0) continue;
          defect = std::max(defect, std::abs(dot(a, b)) / (na * nb));
        }
  }
  rep.max_orthogonality_defect = defect;
  rep.ok = rep.reconstruction_error <= tolerance && rep.max_orthogonality_defect <= tolerance;
  return rep;
}

}  // namespace odeco
