#include "odeco/generate.hpp"

#include <algorithm>
#include <cmath>

namespace odeco {

std::string_view to_string(WeightPolicy p) {
  switch (p) {
    case WeightPolicy::DistinctMagnitude: return "distinct";
    case WeightPolicy::Equal: return "equal";
    case WeightPolicy::Explicit: return "explicit";
  }
  return "distinct";
}

WeightPolicy parse_weight_policy(std::string_view s) {
  if (s == "distinct") return WeightPolicy::DistinctMagnitude;
  if (s == "equal") return WeightPolicy::Equal;
  if (s == "explicit") return WeightPolicy::Explicit;
  throw Error("unknown weight policy '" + std::string(s) + "' (expected distinct, equal or explicit)");
}

Matrix random_isometry(std::size_t n, Field field, Rng& rng) {
  if (n == 0) throw ShapeError("random_isometry: n must be positive");
  // Modified Gram-Schmidt yields R with a positive real diagonal, which is
  // exactly the correction that makes Q Haar distributed.
  while (true) {
    Matrix g(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.gaussian(field);
    try {
      return orthonormalize(g);
    } catch (const RankDeficientError&) {
    }
  }
}

Matrix random_isometry(std::size_t n, Field field, std::uint64_t seed) {
  Rng rng(seed);
  return random_isometry(n, field, rng);
}

std::size_t max_terms(Scenario scenario, const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw ShapeError("max_terms: empty shape");
  if (scenario == Scenario::Alternating) return dims.front() / dims.size();
  return *std::min_element(dims.begin(), dims.end());
}

namespace {

void validate_shape(Scenario scenario, const std::vector<std::size_t>& dims) {
  if (dims.size() < 3) throw ShapeError("order >= 3 required");
  for (auto n : dims)
    if (n == 0) throw ShapeError("dimensions must be positive");
  if (scenario != Scenario::Ordinary && !std::all_of(dims.begin(), dims.end(), [&](std::size_t n) { return n == dims[0]; }))
    throw ShapeError("symmetric and alternating shapes need equal dimensions");
}

std::vector<cplx> draw_weights(const SampleSpec& spec, Rng& rng) {
  const std::size_t k = spec.k;
  const bool ordinary = spec.scenario == Scenario::Ordinary;
  std::vector<cplx> w;
  switch (spec.weight_policy) {
    case WeightPolicy::Explicit:
      if (spec.weights.size() != k) throw Error("sample: explicit weights must list k values");
      if (spec.field == Field::Real && has_imaginary(spec.weights)) throw FieldError("sample: complex weights for a real tensor");
      return spec.weights;
    case WeightPolicy::Equal:
      for (std::size_t i = 0; i < k; ++i) w.push_back(ordinary ? cplx(1.0) : rng.unit_scalar(spec.field));
      return w;
    case WeightPolicy::DistinctMagnitude: {
      std::vector<double> mags;
      for (int tries = 0; mags.size() < k; ++tries) {
        if (tries > 100000) throw Error("sample: could not draw well-separated weights");
        const double c = rng.uniform(0.5, 2.0);
        const bool ok = std::all_of(mags.begin(), mags.end(),
                                    [&](double m) { return std::max(m, c) / std::min(m, c) >= 1.05; });
        if (ok) mags.push_back(c);
      }
      for (double m : mags) w.push_back(ordinary ? cplx(m) : m * rng.unit_scalar(spec.field));
      return w;
    }
  }
  return w;
}

// Sum of terms built from the leading columns of the isometries.
Tensor assemble(Scenario scenario, Field field, const std::vector<std::size_t>& dims, const std::vector<Matrix>& q,
                const std::vector<cplx>& weights) {
  Tensor t(dims, field);
  const std::size_t d = dims.size();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Tensor term;
    switch (scenario) {
      case Scenario::Ordinary: {
        std::vector<Vector> vs;
        for (std::size_t j = 0; j < d; ++j) vs.push_back(q[j].column(i));
        term = outer(vs, field);
        break;
      }
      case Scenario::Symmetric:
        term = outer(std::vector<Vector>(d, q[0].column(i)), field);
        break;
      case Scenario::Alternating: {
        std::vector<Vector> vs;
        for (std::size_t j = 0; j < d; ++j) vs.push_back(q[0].column(i * d + j));
        term = wedge(vs, field);
        break;
      }
    }
    term *= weights[i];
    t += term;
  }
  return t;
}

std::vector<Matrix> draw_isometries(Scenario scenario, Field field, const std::vector<std::size_t>& dims, Rng& rng) {
  std::vector<Matrix> q;
  if (scenario == Scenario::Ordinary)
    for (auto n : dims) q.push_back(random_isometry(n, field, rng));
  else
    q.push_back(random_isometry(dims[0], field, rng));
  return q;
}

}  // namespace

GroundTruth sample(const SampleSpec& spec) {
  validate_shape(spec.scenario, spec.dims);
  if (spec.k > max_terms(spec.scenario, spec.dims))
    throw ShapeError("sample: k = " + std::to_string(spec.k) + " exceeds the maximum of " +
                     std::to_string(max_terms(spec.scenario, spec.dims)) + " terms for this shape");
  Rng rng(spec.seed);
  std::vector<Matrix> q = draw_isometries(spec.scenario, spec.field, spec.dims, rng);
  if (spec.scenario == Scenario::Symmetric) {
    // Canonical phases up front, so the weights appear in the tensor as given.
    for (std::size_t i = 0; i < q[0].cols(); ++i) {
      Vector v = q[0].column(i);
      canonicalize_phase(v);
      q[0].set_column(i, v);
    }
  }
  const std::vector<cplx> weights = draw_weights(spec, rng);
  const std::size_t d = spec.dims.size();

  GroundTruth g;
  g.tensor = assemble(spec.scenario, spec.field, spec.dims, q, weights);
  Decomposition& dec = g.decomposition;
  dec.scenario = spec.scenario;
  dec.field = spec.field;
  dec.dims = spec.dims;
  for (std::size_t i = 0; i < spec.k; ++i) {
    DecompositionTerm term;
    switch (spec.scenario) {
      case Scenario::Ordinary:
        for (std::size_t j = 0; j < d; ++j) term.vectors.push_back(q[j].column(i));
        term.vectors[0] = scaled(term.vectors[0], weights[i]);
        break;
      case Scenario::Symmetric:
        term.weight = weights[i];
        term.vectors.push_back(q[0].column(i));
        break;
      case Scenario::Alternating:
        term.weight = weights[i];
        for (std::size_t j = 0; j < d; ++j) term.vectors.push_back(q[0].column(i * d + j));
        break;
    }
    dec.terms.push_back(std::move(term));
  }
  return g;
}

Tensor perturb(const GroundTruth& g, double epsilon, std::uint64_t seed) {
  if (epsilon < 0.0) throw Error("perturb: epsilon must be nonnegative");
  const Tensor& t = g.tensor;
  if (epsilon == 0.0) return t;
  Rng rng(seed);
  Tensor noise(t.dims(), t.field());
  for (std::size_t i = 0; i < noise.size(); ++i) noise[i] = rng.gaussian(t.field());
  if (g.decomposition.scenario == Scenario::Symmetric) noise = project_symmetric(noise);
  if (g.decomposition.scenario == Scenario::Alternating) noise = project_alternating(noise);
  const double nn = noise.norm();
  if (nn == 0.0) return t;
  noise *= epsilon * t.norm() / nn;
  return t + noise;
}

long long variety_dimension(Scenario scenario, Field field, const std::vector<std::size_t>& dims) {
  validate_shape(scenario, dims);
  const long long factor = field == Field::Complex ? 2 : 1;
  const long long d = static_cast<long long>(dims.size());
  switch (scenario) {
    case Scenario::Symmetric: {
      const long long n = static_cast<long long>(dims[0]);
      return factor * (n + n * (n - 1) / 2);
    }
    case Scenario::Ordinary: {
      if (!std::is_sorted(dims.begin(), dims.end())) throw ShapeError("variety_dimension: ordinary dims must be ascending");
      const long long n1 = static_cast<long long>(dims[0]);
      long long twice = 2 * n1;
      for (auto nj : dims) twice += n1 * (2 * static_cast<long long>(nj) - n1 - 1);
      return factor * twice / 2;
    }
    case Scenario::Alternating: {
      const long long n = static_cast<long long>(dims[0]);
      const long long l = n / d;
      return factor * (2 * l + l * d * (2 * n - (l + 1) * d)) / 2;
    }
  }
  return 0;
}

namespace {

// Real coordinates of a skew-symmetric (real) or skew-Hermitian (complex) matrix.
std::size_t skew_parameter_count(std::size_t n, Field field) {
  return field == Field::Real ? n * (n - 1) / 2 : n * n;
}

Matrix skew_from_parameters(std::size_t n, Field field, const double* p) {
  Matrix a(n, n, field);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = field == Field::Real ? cplx(p[k], 0.0) : cplx(p[k], p[k + 1]);
      k += field == Field::Real ? 1 : 2;
      a(i, j) = v;
      a(j, i) = -std::conj(v);
    }
  if (field == Field::Complex)
    for (std::size_t i = 0; i < n; ++i) a(i, i) = cplx(0.0, p[k++]);
  return a;
}

}  // namespace

std::size_t estimate_dimension(Scenario scenario, Field field, const std::vector<std::size_t>& dims,
                               std::uint64_t seed) {
  validate_shape(scenario, dims);
  SampleSpec spec;
  spec.scenario = scenario;
  spec.field = field;
  spec.dims = dims;
  spec.k = max_terms(scenario, dims);
  spec.seed = seed;
  Rng rng(seed);
  const std::vector<Matrix> q0 = draw_isometries(scenario, field, dims, rng);
  const std::vector<cplx> w0 = draw_weights(spec, rng);

  std::vector<std::size_t> offsets;
  std::size_t count = 0;
  for (const auto& q : q0) {
    offsets.push_back(count);
    count += skew_parameter_count(q.rows(), field);
  }
  const std::size_t weight_offset = count;
  count += field == Field::Real ? w0.size() : 2 * w0.size();

  auto evaluate = [&](const std::vector<double>& p) {
    std::vector<Matrix> q;
    for (std::size_t m = 0; m < q0.size(); ++m) {
      const std::size_t n = q0[m].rows();
      Matrix step = Matrix::identity(n, field);
      const Matrix a = skew_from_parameters(n, field, p.data() + offsets[m]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) step(i, j) += a(i, j);
      q.push_back(orthonormalize(q0[m] * step));
    }
    std::vector<cplx> w = w0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (field == Field::Real)
        w[i] += p[weight_offset + i];
      else
        w[i] += cplx(p[weight_offset + 2 * i], p[weight_offset + 2 * i + 1]);
    }
    return assemble(scenario, field, dims, q, w);
  };

  const double h = 1e-5;
  const Tensor base = evaluate(std::vector<double>(count, 0.0));
  const std::size_t rows = field == Field::Real ? base.size() : 2 * base.size();
  Matrix jac(rows, count);
  std::vector<double> p(count, 0.0);
  for (std::size_t c = 0; c < count; ++c) {
    p[c] = h;
    const Tensor plus = evaluate(p);
    p[c] = -h;
    const Tensor minus = evaluate(p);
    p[c] = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i) {
      const cplx g = (plus[i] - minus[i]) / (2.0 * h);
      if (field == Field::Real) {
        jac(i, c) = g.real();
      } else {
        jac(2 * i, c) = g.real();
        jac(2 * i + 1, c) = g.imag();
      }
    }
  }
  return numerical_rank(svd(jac).singular_values, 1e-6);
}

}  // namespace odeco
