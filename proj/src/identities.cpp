#include "odeco/identities.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "odeco/random.hpp"

namespace odeco {

std::string_view to_string(EvalMode m) { return m == EvalMode::Exhaustive ? "exhaustive" : "sampled"; }

namespace {

// A free argument ranges over the basis vectors e_offset .. e_{offset+size-1}
// of the ambient space (a block of U + V + W for the partial identities).
struct ArgSpace {
  std::size_t offset;
  std::size_t size;
};

using Args = std::vector<Vector>;

struct Family {
  std::vector<ArgSpace> spaces;
  std::function<Vector(const Args&)> defect;
};

Vector difference(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

double saturating_tuple_count(const std::vector<ArgSpace>& spaces) {
  double count = 1.0;
  for (const auto& s : spaces) count *= static_cast<double>(s.size);
  return count;
}

double normalize(double raw, double scale, int degree) {
  if (scale == 0.0) return 0.0;
  return raw / std::pow(scale, degree);
}

struct Tracker {
  double worst = 0.0;
  std::vector<std::size_t> worst_tuple;
  std::size_t count = 0;

  void see(double value, const std::vector<std::size_t>* tuple) {
    ++count;
    if (tuple && (value > worst || worst_tuple.empty())) worst_tuple = *tuple;
    worst = std::max(worst, value);
  }
};

void run_exhaustive(std::size_t dim, const Family& fam, Tracker& tr) {
  const std::size_t m = fam.spaces.size();
  for (const auto& s : fam.spaces)
    if (s.size == 0) return;
  std::vector<std::size_t> idx(m, 0), global(m);
  Args args(m, Vector(dim, 0.0));
  for (std::size_t k = 0; k < m; ++k) {
    global[k] = fam.spaces[k].offset;
    args[k][global[k]] = 1.0;
  }
  while (true) {
    tr.see(norm(fam.defect(args)), &global);
    std::size_t k = m;
    while (k-- > 0) {
      args[k][global[k]] = 0.0;
      if (++idx[k] < fam.spaces[k].size) {
        global[k] = fam.spaces[k].offset + idx[k];
        args[k][global[k]] = 1.0;
        break;
      }
      idx[k] = 0;
      global[k] = fam.spaces[k].offset;
      args[k][global[k]] = 1.0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
}

void run_sampled(std::size_t dim, Field field, const Family& fam, std::size_t samples, Rng& rng, Tracker& tr) {
  for (std::size_t s = 0; s < samples; ++s) {
    Args args;
    for (const auto& sp : fam.spaces) {
      Vector v(dim, 0.0);
      const Vector u = rng.unit_vector(sp.size, field);
      for (std::size_t i = 0; i < sp.size; ++i) v[sp.offset + i] = u[i];
      args.push_back(std::move(v));
    }
    tr.see(norm(fam.defect(args)), nullptr);
  }
}

ResidualReport evaluate(const std::string& name, const MulTable& m, const std::vector<Family>& families, int degree,
                        const EvalOptions& opts) {
  double total = 0.0;
  for (const auto& f : families) total += saturating_tuple_count(f.spaces);
  ResidualReport r;
  r.identity = name;
  Tracker tr;
  if (total <= static_cast<double>(opts.tuple_budget)) {
    r.mode = EvalMode::Exhaustive;
    for (const auto& f : families) run_exhaustive(m.dim, f, tr);
  } else {
    r.mode = EvalMode::Sampled;
    Rng rng(opts.seed);
    for (const auto& f : families) run_sampled(m.dim, m.field, f, opts.samples, rng, tr);
  }
  r.raw_max = tr.worst;
  r.normalized = normalize(tr.worst, m.source_norm, degree);
  r.tuples_evaluated = tr.count;
  if (r.mode == EvalMode::Exhaustive) r.worst_tuple = tr.worst_tuple;
  return r;
}

std::vector<ArgSpace> whole(const MulTable& m, std::size_t arity) { return std::vector<ArgSpace>(arity, {0, m.dim}); }

Vector add3(const Vector& a, const Vector& b, const Vector& c) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i] + c[i];
  return out;
}

}  // namespace

ResidualReport residual_associativity(const MulTable& m, const EvalOptions& opts) {
  const SparseProduct mul(m);
  Family f{whole(m, 3), [&mul](const Args& a) {
             return difference(mul(mul(a[0], a[1]), a[2]), mul(a[0], mul(a[1], a[2])));
           }};
  return evaluate("associativity", m, {f}, 2, opts);
}

ResidualReport residual_semi_associativity(const MulTable& m, const EvalOptions& opts) {
  const SparseProduct mul(m);
  // Arguments (x, y, z, u); the two defects are combined by taking the larger.
  Family f{whole(m, 4), [&mul](const Args& a) {
             const Vector& x = a[0];
             const Vector& y = a[1];
             const Vector& z = a[2];
             const Vector& u = a[3];
             const Vector d1 = difference(mul(x, mul(y, mul(z, u))),
                                          mul(z, mul(y, mul(x, u))));
             const Vector d2 = difference(mul(mul(x, y), mul(z, u)),
                                          mul(mul(x, u), mul(z, y)));
             return norm(d1) >= norm(d2) ? d1 : d2;
           }};
  return evaluate("semi_associativity", m, {f}, 3, opts);
}

ResidualReport residual_jacobi(const MulTable& m, const EvalOptions& opts) {
  const SparseProduct mul(m);
  Family f{whole(m, 3), [&mul](const Args& a) {
             const Vector& x = a[0];
             const Vector& y = a[1];
             const Vector& z = a[2];
             return add3(mul(mul(x, y), z), mul(mul(y, z), x), mul(mul(z, x), y));
           }};
  return evaluate("jacobi", m, {f}, 2, opts);
}

Vector evaluate_cross_first(const MulTable& m, const Vector& x, const Vector& y, const Vector& z) {
  return apply(m, x, apply(m, apply(m, x, y), apply(m, x, z)));
}

ResidualReport residual_cross_first(const MulTable& m, const EvalOptions& opts) {
  const SparseProduct mul(m);
  // The identity is cubic in x, so basis vectors alone do not test it. The
  // exhaustive path evaluates the fully polarized form
  //   (1/6) sum_{perms} [x_p, [[x_q, y], [x_r, z]]]
  // over multisets {x_1, x_2, x_3} of real-basis vectors (e_j, and i e_j over C)
  // and basis vectors y, z. It vanishes identically iff the identity holds.
  const std::size_t n = m.dim;
  std::vector<Vector> reals;
  for (std::size_t j = 0; j < n; ++j) reals.push_back(basis_vector(n, j));
  if (m.field == Field::Complex)
    for (std::size_t j = 0; j < n; ++j) reals.push_back(scaled(basis_vector(n, j), cplx(0.0, 1.0)));
  const std::size_t r = reals.size();
  const double multisets = static_cast<double>(r) * (r + 1) * (r + 2) / 6.0;
  const double total = multisets * static_cast<double>(n) * static_cast<double>(n);

  ResidualReport rep;
  rep.identity = "cross_first";
  Tracker tr;
  if (total <= static_cast<double>(opts.tuple_budget)) {
    rep.mode = EvalMode::Exhaustive;
    std::vector<std::size_t> tuple(5);
    for (std::size_t yi = 0; yi < n; ++yi)
      for (std::size_t zi = 0; zi < n; ++zi) {
        const Vector y = basis_vector(n, yi);
        const Vector z = basis_vector(n, zi);
        std::vector<Vector> left(r), right(r);
        for (std::size_t u = 0; u < r; ++u) {
          left[u] = mul(reals[u], y);
          right[u] = mul(reals[u], z);
        }
        std::vector<Vector> inner(r * r);
        for (std::size_t u = 0; u < r; ++u)
          for (std::size_t v = 0; v < r; ++v) inner[u * r + v] = mul(left[u], right[v]);
        for (std::size_t p = 0; p < r; ++p)
          for (std::size_t q = p; q < r; ++q)
            for (std::size_t s = q; s < r; ++s) {
              const std::size_t ids[3] = {p, q, s};
              Vector acc(n, 0.0);
              static constexpr std::size_t perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                          {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
              for (const auto& pi : perms) {
                const Vector term = mul(reals[ids[pi[0]]], inner[ids[pi[1]] * r + ids[pi[2]]]);
                for (std::size_t c = 0; c < n; ++c) acc[c] += term[c];
              }
              tuple = {p % n, q % n, s % n, yi, zi};
              tr.see(norm(acc) / 6.0, &tuple);
            }
      }
    rep.worst_tuple = tr.worst_tuple;
  } else {
    rep.mode = EvalMode::Sampled;
    Rng rng(opts.seed);
    for (std::size_t s = 0; s < opts.samples; ++s) {
      const Vector x = rng.unit_vector(n, m.field);
      const Vector y = rng.unit_vector(n, m.field);
      const Vector z = rng.unit_vector(n, m.field);
      tr.see(norm(mul(x, mul(mul(x, y), mul(x, z)))), nullptr);
    }
  }
  rep.raw_max = tr.worst;
  rep.normalized = normalize(tr.worst, m.source_norm, 4);
  rep.tuples_evaluated = tr.count;
  return rep;
}

ResidualReport residual_cross_second(const MulTable& m, const EvalOptions& opts) {
  const SparseProduct mul(m);
  Family f{whole(m, 5), [&mul](const Args& v) {
             const Vector& a = v[0];
             const Vector& b = v[1];
             const Vector& c = v[2];
             const Vector& d = v[3];
             const Vector& e = v[4];
             const Vector lhs = mul(mul(mul(a, b), c), mul(d, e));
             const Vector r1 = mul(a, mul(mul(b, mul(c, d)), e));
             const Vector r2 = mul(a, mul(mul(b, mul(e, c)), d));
             const Vector r3 = mul(b, mul(mul(a, mul(d, e)), c));
             return difference(lhs, add3(r1, r2, r3));
           }};
  return evaluate("cross_second", m, {f}, 4, opts);
}

ResidualReport residual_partial_associativity(const Tensor& t, const EvalOptions& opts) {
  const TriMulTable tri = induce_ordinary(t);
  const MulTable& m = tri.table;
  const SparseProduct mul(m);
  std::vector<Family> families;
  for (std::size_t xz = 0; xz < 3; ++xz)
    for (std::size_t y = 0; y < 3; ++y) {
      const ArgSpace outer{tri.offset(xz), tri.dims[xz]};
      const ArgSpace mid{tri.offset(y), tri.dims[y]};
      families.push_back({{outer, mid, outer}, [&mul](const Args& a) {
                            return difference(mul(mul(a[0], a[1]), a[2]),
                                              mul(a[0], mul(a[1], a[2])));
                          }});
    }
  return evaluate("partial_associativity", m, families, 2, opts);
}

ResidualReport residual_partial_semi_associativity(const Tensor& t, const EvalOptions& opts) {
  const TriMulTable tri = induce_ordinary(t);
  const MulTable& m = tri.table;
  const SparseProduct mul(m);
  std::vector<Family> families;
  static constexpr std::size_t roles[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& role : roles) {
    const ArgSpace p{tri.offset(role[0]), tri.dims[role[0]]};
    const ArgSpace q{tri.offset(role[1]), tri.dims[role[1]]};
    const ArgSpace s{tri.offset(role[2]), tri.dims[role[2]]};
    // u, u', u'' in the first role, v in the second.
    families.push_back({{p, p, p, q}, [&mul](const Args& a) {
                          return difference(mul(a[0], mul(a[1], mul(a[2], a[3]))),
                                            mul(a[2], mul(a[1], mul(a[0], a[3]))));
                        }});
    // (u, v, v', w) with u, v, w in the three roles.
    families.push_back({{p, q, q, s}, [&mul](const Args& a) {
                          const Vector& u = a[0];
                          const Vector& v = a[1];
                          const Vector& v2 = a[2];
                          const Vector& w = a[3];
                          return difference(mul(u, mul(v, mul(w, v2))),
                                            mul(w, mul(v, mul(u, v2))));
                        }});
    families.push_back({{p, q, q, s}, [&mul](const Args& a) {
                          const Vector& u = a[0];
                          const Vector& v = a[1];
                          const Vector& v2 = a[2];
                          const Vector& w = a[3];
                          return difference(mul(mul(u, v), mul(w, v2)),
                                            mul(mul(u, v2), mul(w, v)));
                        }});
  }
  return evaluate("partial_semi_associativity", m, families, 3, opts);
}

ResidualReport residual_star_symmetry(const Tensor& t, std::size_t slot) {
  if (t.order() < 3) throw ShapeError("residual_star_symmetry: order >= 3 required");
  if (slot >= t.order()) throw ShapeError("residual_star_symmetry: slot out of range");
  const Tensor g = star_contract(t, slot);
  Tensor sym = g;
  const std::size_t pairs = g.order() / 2;
  for (std::size_t j = 0; j < pairs; ++j) {
    std::vector<std::size_t> swap(g.order());
    for (std::size_t k = 0; k < swap.size(); ++k) swap[k] = k;
    std::swap(swap[2 * j], swap[2 * j + 1]);
    Tensor swapped = permute_slots(sym, swap);
    sym += swapped;
    sym *= 0.5;
  }
  ResidualReport r;
  r.identity = "star_symmetry_" + std::to_string(slot + 1);
  r.raw_max = (g - sym).norm();
  r.normalized = normalize(r.raw_max, t.norm(), 2);
  r.tuples_evaluated = 1;
  r.worst_tuple = {slot};
  return r;
}

ResidualReport residual_casimir(const Tensor& t, const EvalOptions& opts) {
  const MulTable m = induce_alternating(t, std::numeric_limits<double>::infinity());
  const Matrix h = casimir(t);
  const SparseProduct mul(m);
  Family f{whole(m, 2), [&mul, &h](const Args& a) {
             return difference(mul(h * a[0], a[1]), mul(a[0], h * a[1]));
           }};
  return evaluate("casimir", m, {f}, 3, opts);
}

Tensor check_scenario(const Tensor& t, Scenario scenario, double tolerance) {
  switch (scenario) {
    case Scenario::Ordinary:
      return t;
    case Scenario::Symmetric: {
      if (!t.is_cubical()) throw ScenarioError("symmetric tensor must have equal dimensions in every slot");
      Tensor p = project_symmetric(t);
      const double nt = t.norm();
      if (nt > 0.0 && (t - p).norm() / nt > tolerance)
        throw ScenarioError("tensor is not symmetric within tolerance");
      return p;
    }
    case Scenario::Alternating: {
      if (!t.is_cubical()) throw ScenarioError("alternating tensor must have equal dimensions in every slot");
      Tensor p = project_alternating(t);
      const double nt = t.norm();
      if (nt > 0.0 && (t - p).norm() / nt > tolerance)
        throw ScenarioError("tensor is not alternating within tolerance");
      return p;
    }
  }
  return t;
}

Decision decide(const Tensor& t, Scenario scenario, double tolerance, const EvalOptions& opts) {
  if (t.order() != 3) throw ShapeError("decide: order-3 tensor required (use decide_higher_order)");
  const Tensor s = check_scenario(t, scenario, tolerance);
  const double inf = std::numeric_limits<double>::infinity();
  Decision d;
  d.scenario = scenario;
  d.field = t.field();
  d.tolerance = tolerance;
  const bool real = t.field() == Field::Real;
  switch (scenario) {
    case Scenario::Symmetric: {
      const MulTable m = induce_symmetric(s, inf);
      d.residuals.push_back(real ? residual_associativity(m, opts) : residual_semi_associativity(m, opts));
      break;
    }
    case Scenario::Ordinary:
      if (real) {
        d.residuals.push_back(residual_partial_associativity(s, opts));
        for (std::size_t l = 0; l < 3; ++l) d.residuals.push_back(residual_star_symmetry(s, l));
      } else {
        d.residuals.push_back(residual_partial_semi_associativity(s, opts));
      }
      break;
    case Scenario::Alternating: {
      const MulTable m = induce_alternating(s, inf);
      if (real) {
        d.residuals.push_back(residual_jacobi(m, opts));
      } else {
        d.residuals.push_back(residual_casimir(s, opts));
      }
      d.residuals.push_back(residual_cross_first(m, opts));
      if (!real) d.residuals.push_back(residual_cross_second(m, opts));
      if (s.dims()[0] < 8) d.notes.push_back("degree-4 cross identities are not needed below dimension 8; evaluated anyway");
      break;
    }
  }
  for (const auto& r : d.residuals)
    if (!(r.normalized <= tolerance)) d.accepted = false;
  return d;
}

}  // namespace odeco
