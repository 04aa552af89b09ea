#include <gtest/gtest.h>

#include "odeco/generate.hpp"
#include "odeco/reduce.hpp"
#include "oracle.hpp"

using namespace odeco;
using oracle::Vec;

namespace {

Vector ev(std::size_t n, std::size_t i) { return basis_vector(n, i); }

Tensor odeco_sample(Scenario s, Field f, std::vector<std::size_t> dims, std::uint64_t seed) {
  SampleSpec spec;
  spec.scenario = s;
  spec.field = f;
  spec.k = max_terms(s, dims);
  spec.dims = std::move(dims);
  spec.seed = seed;
  return sample(spec).tensor;
}

// a_i (x) u_i (x) v_i (x) w_i with orthonormal a, u, w and non-orthogonal v:
// flattenings (i) and (ii) are odeco, (iii) is not.
Tensor third_slot_counterexample() {
  oracle::Gen g(50);
  const auto a = oracle::frame(g, 2, 2, false), u = oracle::frame(g, 3, 2, false), w = oracle::frame(g, 2, 2, false);
  const Vec v0{1.0, 0.0, 0.0}, v1{0.6, 0.8, 0.0};
  Vec data = oracle::outer({a[0], u[0], v0, w[0]});
  oracle::axpy(data, 2.0, oracle::outer({a[1], u[1], v1, w[1]}));
  return oracle::make({2, 3, 3, 2}, data, false);
}

bool has_rule(const ReductionTrace& t, const std::string& rule) {
  for (const auto& s : t.steps)
    if (s.rule == rule) return true;
  return false;
}

}  // namespace

TEST(Flattening, PartitionsForOrderFour) {
  const auto p = flattening_partitions(4);
  using B = std::vector<std::vector<std::size_t>>;
  EXPECT_EQ(p[0].blocks, (B{{0}, {1}, {2, 3}}));
  EXPECT_EQ(p[1].blocks, (B{{0}, {1, 2}, {3}}));
  EXPECT_EQ(p[2].blocks, (B{{0}, {1, 3}, {2}}));
  const auto q = flattening_partitions(5);
  EXPECT_EQ(q[2].blocks, (B{{0}, {1}, {2, 4}, {3}}));
  EXPECT_THROW(flattening_partitions(3), ShapeError);
}

TEST(Flattening, OdecoTensorPassesAllThree) {
  for (Field f : {Field::Real, Field::Complex}) {
    const Tensor t = odeco_sample(Scenario::Ordinary, f, {2, 3, 3, 2}, 1);
    for (const Tensor& flat : flattening_triple(t)) EXPECT_TRUE(decide(flat, Scenario::Ordinary, 1e-8).accepted);
  }
}

TEST(Flattening, ThirdSlotCounterexample) {
  const Tensor t = third_slot_counterexample();
  const auto flats = flattening_triple(t);
  EXPECT_TRUE(decide(flats[0], Scenario::Ordinary, 1e-8).accepted);
  EXPECT_TRUE(decide(flats[1], Scenario::Ordinary, 1e-8).accepted);
  EXPECT_FALSE(decide(flats[2], Scenario::Ordinary, 1e-8).accepted);
  const ReductionTrace trace = decide_higher_order(t, Scenario::Ordinary, 1e-8);
  EXPECT_FALSE(trace.final.accepted);
  bool iii_rejected = false;
  for (const auto& s : trace.steps)
    if (s.rule == "flattening_iii" && !s.accepted) iii_rejected = true;
  EXPECT_TRUE(iii_rejected);
}

TEST(DecideHigherOrder, SymmetricRoute) {
  const Tensor t = odeco_sample(Scenario::Symmetric, Field::Real, {3, 3, 3, 3}, 2);
  const ReductionTrace trace = decide_higher_order(t, Scenario::Symmetric, 1e-8);
  EXPECT_TRUE(trace.final.accepted);
  ASSERT_FALSE(trace.steps.empty());
  EXPECT_EQ(trace.steps[0].rule, "symmetric_as_ordinary");
  EXPECT_EQ(trace.steps[1].rule, "flattening_i");
  EXPECT_EQ(trace.steps[1].path, "root/i");
}

TEST(DecideHigherOrder, AxisWedgesInR8) {
  std::vector<Vector> first, second;
  for (std::size_t i = 0; i < 4; ++i) {
    first.push_back(ev(8, i));
    second.push_back(ev(8, 4 + i));
  }
  const Tensor t = wedge(first, Field::Real) + wedge(second, Field::Real);
  const ReductionTrace trace = decide_higher_order(t, Scenario::Alternating, 1e-8);
  EXPECT_TRUE(trace.final.accepted);
  EXPECT_TRUE(has_rule(trace, "contraction_probe"));
}

TEST(DecideHigherOrder, RandomSymmetricRejected) {
  oracle::Gen g(51);
  const Tensor t = project_symmetric(oracle::make({3, 3, 3, 3}, g.vec(81, false), false));
  const ReductionTrace trace = decide_higher_order(t, Scenario::Symmetric, 1e-8);
  EXPECT_FALSE(trace.final.accepted);
  bool failing_flattening = false;
  for (const auto& s : trace.steps)
    if (s.rule.rfind("flattening_", 0) == 0 && !s.accepted) failing_flattening = true;
  EXPECT_TRUE(failing_flattening);
}

TEST(DecideHigherOrder, OrdersFourAndFive) {
  for (Scenario s : {Scenario::Ordinary, Scenario::Symmetric})
    for (Field f : {Field::Real, Field::Complex})
      for (std::size_t d : {4u, 5u}) {
        const Tensor t = odeco_sample(s, f, std::vector<std::size_t>(d, 3), 10 + d);
        EXPECT_TRUE(decide_higher_order(t, s, 1e-8).final.accepted) << to_string(s) << to_string(f) << d;
      }
  for (Field f : {Field::Real, Field::Complex}) {
    EXPECT_TRUE(decide_higher_order(odeco_sample(Scenario::Alternating, f, {8, 8, 8, 8}, 3), Scenario::Alternating, 1e-8)
                    .final.accepted);
    EXPECT_TRUE(decide_higher_order(odeco_sample(Scenario::Alternating, f, {5, 5, 5, 5, 5}, 4), Scenario::Alternating,
                                    1e-8)
                    .final.accepted);
  }
}

TEST(DecideHigherOrder, TraceIsDeterministic) {
  oracle::Gen g(52);
  const Tensor t = project_alternating(oracle::make({6, 6, 6, 6}, g.vec(1296, true), true));
  ReduceOptions opts;
  opts.seed = 9;
  const auto a = decide_higher_order(t, Scenario::Alternating, 1e-8, opts);
  const auto b = decide_higher_order(t, Scenario::Alternating, 1e-8, opts);
  EXPECT_FALSE(a.final.accepted);
  ASSERT_EQ(a.steps.size(), b.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) EXPECT_EQ(a.steps[i].path, b.steps[i].path);
  EXPECT_EQ(a.final.residuals[0].raw_max, b.final.residuals[0].raw_max);
}

TEST(DecideHigherOrder, ProbeCountKnob) {
  const Tensor t = odeco_sample(Scenario::Alternating, Field::Real, {4, 4, 4, 4}, 5);
  ReduceOptions opts;
  opts.probes = 2;
  std::size_t probes = 0;
  for (const auto& s : decide_higher_order(t, Scenario::Alternating, 1e-8, opts).steps)
    if (s.rule == "contraction_probe") ++probes;
  EXPECT_EQ(probes, 2u);
  probes = 0;
  for (const auto& s : decide_higher_order(t, Scenario::Alternating, 1e-8).steps)
    if (s.rule == "contraction_probe") ++probes;
  EXPECT_EQ(probes, 5u);
}

TEST(ContractionProbe, Examples) {
  const Tensor w4 = wedge({ev(4, 0), ev(4, 1), ev(4, 2), ev(4, 3)}, Field::Real);
  const Tensor r = contraction_probe(w4, ev(4, 3));
  // Oracle: every permutation of the first three indices with the fixed last one.
  const Vec want = oracle::wedge({oracle::e(4, 0), oracle::e(4, 1), oracle::e(4, 2)});
  EXPECT_LE(oracle::dist(r.entries(), want), 0.0);

  const Tensor w = wedge({ev(5, 0), ev(5, 1), ev(5, 2)}, Field::Real);
  EXPECT_EQ(contraction_probe(w, ev(5, 4)).norm(), 0.0);

  oracle::Gen g(53);
  const Tensor s = odeco_sample(Scenario::Alternating, Field::Complex, {6, 6, 6, 6}, 6);
  Vec v = g.vec(6, true);
  const double nv = oracle::norm(v);
  for (auto& x : v) x /= nv;
  const Tensor c = contraction_probe(s, v);
  EXPECT_LE(alternating_defect(c), 1e-13);
  EXPECT_THROW(contraction_probe(s, Vector(6, 0.5)), ShapeError);
  EXPECT_THROW(contraction_probe(s, Vector{1.0}), ShapeError);
}
