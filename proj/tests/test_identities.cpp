#include <gtest/gtest.h>

#include "odeco/generate.hpp"
#include "odeco/identities.hpp"
#include "oracle.hpp"

using namespace odeco;
using oracle::Vec;

namespace {

Vector ev(std::size_t n, std::size_t i) { return basis_vector(n, i); }

Tensor sym_pattern() {
  Tensor t({2, 2, 2}, Field::Real);
  for (auto idx : {std::vector<std::size_t>{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) t.at(idx) = 1.0;
  return t;
}

Tensor udeco(Scenario s, Field f, std::vector<std::size_t> dims, std::size_t k, std::uint64_t seed) {
  SampleSpec spec;
  spec.scenario = s;
  spec.field = f;
  spec.dims = std::move(dims);
  spec.k = k;
  spec.seed = seed;
  return sample(spec).tensor;
}

Tensor gaussian(oracle::Gen& g, const std::vector<std::size_t>& dims, bool complex) {
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  return oracle::make(dims, g.vec(total, complex), complex);
}

// max over basis triples of |(e_a e_b) e_c - e_a (e_b e_c)|, from raw constants.
double associator_oracle(const MulTable& m) {
  const std::size_t n = m.dim;
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Vec ea = oracle::e(n, a), eb = oracle::e(n, b), ec = oracle::e(n, c);
        const Vec l = oracle::product(m.constants, n, m.semilinear, oracle::product(m.constants, n, m.semilinear, ea, eb), ec);
        const Vec r = oracle::product(m.constants, n, m.semilinear, ea, oracle::product(m.constants, n, m.semilinear, eb, ec));
        worst = std::max(worst, oracle::dist(l, r));
      }
  return worst;
}

double jacobi_oracle(const MulTable& m) {
  const std::size_t n = m.dim;
  auto p = [&](const Vec& x, const Vec& y) { return oracle::product(m.constants, n, m.semilinear, x, y); };
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Vec x = oracle::e(n, a), y = oracle::e(n, b), z = oracle::e(n, c);
        Vec s = p(p(x, y), z);
        oracle::axpy(s, 1.0, p(p(y, z), x));
        oracle::axpy(s, 1.0, p(p(z, x), y));
        worst = std::max(worst, oracle::fro(s));
      }
  return worst;
}

oracle::M3 to_m3(const Matrix& m) {
  oracle::M3 out;
  for (int i = 0; i < 9; ++i) out[i] = m(i / 3, i % 3);
  return out;
}

}  // namespace

TEST(Associativity, OrthogonalIdempotentsVanish) {
  const Tensor t = outer({ev(2, 0), ev(2, 0), ev(2, 0)}, Field::Real) + outer({ev(2, 1), ev(2, 1), ev(2, 1)}, Field::Real);
  EXPECT_EQ(residual_associativity(induce_symmetric(t)).raw_max, 0.0);
}

TEST(Associativity, PatternTensorWorstTriple) {
  const MulTable m = induce_symmetric(sym_pattern());
  const auto r = residual_associativity(m);
  EXPECT_DOUBLE_EQ(r.raw_max, 1.0);
  EXPECT_EQ(r.mode, EvalMode::Exhaustive);
  EXPECT_EQ(r.tuples_evaluated, 8u);
  // (e2 e2) e1 = 0 against e2 (e2 e1) = e1; other triples may tie.
  const Vector lhs = apply(m, apply(m, ev(2, 1), ev(2, 1)), ev(2, 0));
  const Vector rhs = apply(m, ev(2, 1), apply(m, ev(2, 1), ev(2, 0)));
  EXPECT_DOUBLE_EQ(oracle::dist(lhs, rhs), 1.0);
  EXPECT_DOUBLE_EQ(r.normalized, 1.0 / 3.0);
}

TEST(Associativity, OneDimensionalAndOracle) {
  EXPECT_EQ(residual_associativity(make_table(1, Field::Real, {2.5}, false, false)).raw_max, 0.0);
  oracle::Gen g(31);
  for (int trial = 0; trial < 5; ++trial) {
    const MulTable m = induce_symmetric(project_symmetric(gaussian(g, {3, 3, 3}, false)));
    EXPECT_NEAR(residual_associativity(m).raw_max, associator_oracle(m), 1e-12);
  }
}

TEST(Associativity, SampledModeAboveBudget) {
  oracle::Gen g(32);
  const MulTable m = induce_symmetric(project_symmetric(gaussian(g, {4, 4, 4}, false)));
  EvalOptions opts;
  opts.tuple_budget = 10;
  opts.samples = 50;
  opts.seed = 7;
  const auto r = residual_associativity(m, opts);
  EXPECT_EQ(r.mode, EvalMode::Sampled);
  EXPECT_EQ(r.tuples_evaluated, 50u);
  EXPECT_GT(r.normalized, 1e-3);
  EXPECT_EQ(residual_associativity(m, opts).raw_max, r.raw_max);
}

TEST(PartialAssociativity, Examples) {
  EXPECT_LE(residual_partial_associativity(udeco(Scenario::Ordinary, Field::Real, {2, 3, 4}, 2, 1)).normalized, 1e-12);
  const auto w = residual_partial_associativity(wedge({ev(3, 0), ev(3, 1), ev(3, 2)}, Field::Real));
  EXPECT_GT(w.normalized, 0.1);
  EXPECT_EQ(residual_partial_associativity(Tensor({1, 1, 1}, {3.0}, Field::Real)).raw_max, 0.0);
}

TEST(StarSymmetry, Examples) {
  const Tensor t = udeco(Scenario::Ordinary, Field::Real, {2, 3, 2}, 2, 2);
  for (std::size_t l = 0; l < 3; ++l) EXPECT_LE(residual_star_symmetry(t, l).normalized, 1e-14);
  const Tensor shared = outer({ev(2, 0), ev(2, 0), ev(2, 0)}, Field::Real) + outer({ev(2, 0), ev(2, 1), ev(2, 1)}, Field::Real);
  double worst = 0.0;
  for (std::size_t l = 0; l < 3; ++l) worst = std::max(worst, residual_star_symmetry(shared, l).normalized);
  EXPECT_GT(worst, 0.1);
  oracle::Gen g(33);
  const Tensor r1 = outer({g.vec(2, false), g.vec(3, false), g.vec(4, false)}, Field::Real);
  for (std::size_t l = 0; l < 3; ++l) EXPECT_LE(residual_star_symmetry(r1, l).normalized, 1e-14);
  // Over C the conjugated copy breaks pair symmetry even for one term.
  const Tensor c1 = outer({g.vec(2, true), g.vec(3, true), g.vec(4, true)}, Field::Complex);
  EXPECT_GT(residual_star_symmetry(c1, 0).normalized, 1e-3);
  EXPECT_THROW(residual_star_symmetry(t, 3), ShapeError);
}

TEST(SemiAssociativity, Examples) {
  EXPECT_LE(residual_semi_associativity(induce_symmetric(udeco(Scenario::Symmetric, Field::Complex, {3, 3, 3}, 3, 4)))
                .normalized,
            1e-12);
  oracle::Gen g(34);
  int separated = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor t = project_symmetric(gaussian(g, {2, 2, 2}, true));
    if (residual_semi_associativity(induce_symmetric(t)).normalized > 1e-3) ++separated;
  }
  EXPECT_EQ(separated, 20);
  EXPECT_EQ(residual_semi_associativity(induce_symmetric(Tensor({2, 2, 2}, Field::Complex))).raw_max, 0.0);
}

TEST(PartialSemiAssociativity, Examples) {
  EXPECT_LE(residual_partial_semi_associativity(udeco(Scenario::Ordinary, Field::Complex, {2, 3, 3}, 2, 5)).normalized,
            1e-12);
  oracle::Gen g(35);
  EXPECT_GT(residual_partial_semi_associativity(gaussian(g, {2, 2, 2}, true)).normalized, 1e-3);
  EXPECT_EQ(residual_partial_semi_associativity(Tensor({1, 1, 1}, {cplx(1, 1)}, Field::Complex)).raw_max, 0.0);
}

TEST(Jacobi, Examples) {
  EXPECT_EQ(residual_jacobi(cross_product_table(Field::Real)).raw_max, 0.0);
  EXPECT_LE(residual_jacobi(sl3_table()).raw_max, 1e-14);
  oracle::Gen g(36);
  const MulTable m = induce_alternating(project_alternating(gaussian(g, {5, 5, 5}, false)));
  const auto r = residual_jacobi(m);
  EXPECT_GT(r.normalized, 1e-3);
  EXPECT_NEAR(r.raw_max, jacobi_oracle(m), 1e-12);
}

TEST(CrossFirst, CrossProductVanishes) {
  EXPECT_LE(residual_cross_first(cross_product_table(Field::Real)).raw_max, 1e-15);
  EXPECT_LE(residual_cross_first(cross_product_table(Field::Complex)).raw_max, 1e-15);
  EXPECT_EQ(residual_cross_first(make_table(2, Field::Real, std::vector<cplx>(8, 0.0), false, true)).raw_max, 0.0);
}

TEST(CrossFirst, Sl3Counterexample) {
  const MulTable m = sl3_table();
  const oracle::M3 x = [] {
    oracle::M3 a = oracle::unit(1, 1), b = oracle::unit(3, 3);
    for (int i = 0; i < 9; ++i) a[i] -= b[i];
    return a;
  }();
  auto coords = [](const oracle::M3& a) {
    Matrix mm(3, 3, Field::Real);
    for (int i = 0; i < 9; ++i) mm(i / 3, i % 3) = a[i];
    return sl3_coordinates(mm);
  };
  const Vector got = evaluate_cross_first(m, coords(x), coords(oracle::unit(1, 2)), coords(oracle::unit(2, 3)));
  const oracle::M3 gm = to_m3(sl3_matrix(got));
  // Oracle: [X, [[X, Y], [X, Z]]] with plain 3x3 matrices.
  const oracle::M3 want = oracle::commutator(
      x, oracle::commutator(oracle::commutator(x, oracle::unit(1, 2)), oracle::commutator(x, oracle::unit(2, 3))));
  double fro = 0.0;
  for (int i = 0; i < 9; ++i) {
    EXPECT_NEAR(std::abs(gm[i] - want[i]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(gm[i] - 2.0 * oracle::unit(1, 3)[i]), 0.0, 1e-12);
    fro += std::norm(gm[i]);
  }
  EXPECT_NEAR(std::sqrt(fro), 2.0, 1e-12);
  EXPECT_GT(residual_cross_first(m).raw_max, 1.0);
}

TEST(CrossFirst, PolarizedFormCoversDiagonal) {
  // At x_1 = x_2 = x_3 = e_j the polarized form is the identity itself.
  // n = 5: on R^4 every alternating 3-tensor is a single wedge.
  oracle::Gen g(37);
  const MulTable m = induce_alternating(project_alternating(gaussian(g, {5, 5, 5}, false)));
  const auto r = residual_cross_first(m);
  EXPECT_EQ(r.mode, EvalMode::Exhaustive);
  EXPECT_GT(r.normalized, 1e-3);
  double diag = 0.0;
  for (std::size_t j = 0; j < 5; ++j)
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b)
        diag = std::max(diag, oracle::fro(evaluate_cross_first(m, ev(5, j), ev(5, a), ev(5, b))));
  EXPECT_GE(r.raw_max, diag - 1e-15);
}

TEST(CrossSecond, Examples) {
  EXPECT_LE(residual_cross_second(cross_product_table(Field::Complex)).raw_max, 1e-14);
  const Tensor u = udeco(Scenario::Alternating, Field::Complex, {6, 6, 6}, 2, 6);
  EXPECT_LE(residual_cross_second(induce_alternating(u)).normalized, 1e-9);
  oracle::Gen g(38);
  EXPECT_GT(residual_cross_second(induce_alternating(project_alternating(gaussian(g, {6, 6, 6}, true)))).normalized, 1e-3);
  EXPECT_EQ(residual_cross_second(make_table(2, Field::Complex, std::vector<cplx>(8, 0.0), true, true)).raw_max, 0.0);
}

TEST(Casimir, Examples) {
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    EXPECT_LE(residual_casimir(udeco(Scenario::Alternating, Field::Complex, {6, 6, 6}, 2, seed)).normalized, 1e-9);
  EXPECT_LE(residual_casimir(wedge({ev(3, 0), ev(3, 1), ev(3, 2)}, Field::Complex)).raw_max, 1e-15);
  oracle::Gen g(39);
  EXPECT_GT(residual_casimir(project_alternating(gaussian(g, {6, 6, 6}, true))).normalized, 1e-3);
}

TEST(Decide, SymmetricRealAccepts) {
  const Decision d = decide(udeco(Scenario::Symmetric, Field::Real, {4, 4, 4}, 4, 8), Scenario::Symmetric, 1e-8);
  EXPECT_TRUE(d.accepted);
  ASSERT_EQ(d.residuals.size(), 1u);
  EXPECT_EQ(d.residuals[0].identity, "associativity");
}

TEST(Decide, PatternRejected) {
  const Decision d = decide(sym_pattern(), Scenario::Symmetric, 1e-8);
  EXPECT_FALSE(d.accepted);
  EXPECT_DOUBLE_EQ(d.residuals[0].normalized, 1.0 / 3.0);
}

TEST(Decide, ZeroAcceptedEverywhere) {
  for (Scenario s : {Scenario::Ordinary, Scenario::Symmetric, Scenario::Alternating})
    for (Field f : {Field::Real, Field::Complex}) EXPECT_TRUE(decide(Tensor({3, 3, 3}, f), s, 1e-8).accepted);
}

TEST(Decide, RoutesIdentitiesByScenario) {
  auto names = [](const Decision& d) {
    std::vector<std::string> out;
    for (const auto& r : d.residuals) out.push_back(r.identity);
    return out;
  };
  const Tensor z3({3, 3, 3}, Field::Complex);
  EXPECT_EQ(names(decide(z3, Scenario::Symmetric, 1e-8)), std::vector<std::string>{"semi_associativity"});
  EXPECT_EQ(names(decide(z3, Scenario::Ordinary, 1e-8)), std::vector<std::string>{"partial_semi_associativity"});
  EXPECT_EQ(names(decide(z3, Scenario::Alternating, 1e-8)),
            (std::vector<std::string>{"casimir", "cross_first", "cross_second"}));
  const Tensor r3({3, 3, 3}, Field::Real);
  EXPECT_EQ(names(decide(r3, Scenario::Alternating, 1e-8)), (std::vector<std::string>{"jacobi", "cross_first"}));
  EXPECT_EQ(names(decide(r3, Scenario::Ordinary, 1e-8)),
            (std::vector<std::string>{"partial_associativity", "star_symmetry_1", "star_symmetry_2", "star_symmetry_3"}));
}

TEST(Decide, WrongClassThrows) {
  EXPECT_THROW(decide(sym_pattern(), Scenario::Alternating, 1e-8), ScenarioError);
  EXPECT_THROW(decide(Tensor({2, 2, 2, 2}, Field::Real), Scenario::Ordinary, 1e-8), ShapeError);
}

TEST(Decide, WedgeRejectedAsOrdinary) {
  const Tensor w = wedge({ev(3, 0), ev(3, 1), ev(3, 2)}, Field::Real);
  EXPECT_TRUE(decide(w, Scenario::Alternating, 1e-8).accepted);
  EXPECT_FALSE(decide(w, Scenario::Ordinary, 1e-8).accepted);
}
