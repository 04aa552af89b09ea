#include "odeco/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "odeco/random.hpp"

namespace odeco {

std::array<SlotPartition, 3> flattening_partitions(std::size_t order) {
  if (order < 4) throw ShapeError("flattening_partitions: order >= 4 required");
  const std::size_t a = order - 3, b = order - 2, c = order - 1;
  std::array<SlotPartition, 3> out;
  for (auto& p : out)
    for (std::size_t s = 0; s < a; ++s) p.blocks.push_back({s});
  out[0].blocks.push_back({a});
  out[0].blocks.push_back({b, c});
  out[1].blocks.push_back({a, b});
  out[1].blocks.push_back({c});
  out[2].blocks.push_back({a, c});
  out[2].blocks.push_back({b});
  return out;
}

std::array<Tensor, 3> flattening_triple(const Tensor& t) {
  const auto parts = flattening_partitions(t.order());
  return {flatten(t, parts[0]), flatten(t, parts[1]), flatten(t, parts[2])};
}

Tensor contraction_probe(const Tensor& s, const Vector& v) {
  if (s.order() < 2) throw ShapeError("contraction_probe: order >= 2 required");
  if (v.size() != s.dims().back()) throw ShapeError("contraction_probe: vector length != dimension");
  if (std::abs(norm(v) - 1.0) > 1e-10) throw ShapeError("contraction_probe: probe vector must have unit norm");
  return contract(s, s.order() - 1, v);
}

namespace {

class Reducer {
 public:
  Reducer(double tolerance, const ReduceOptions& opts) : tol_(tolerance), opts_(opts), rng_(opts.seed) {}

  bool run(const Tensor& t, Scenario scenario, const std::string& path, std::size_t depth) {
    if (t.order() < 3) throw ShapeError("decide_higher_order: order >= 3 required");
    if (t.order() == 3) return leaf(t, scenario, path, depth);
    switch (scenario) {
      case Scenario::Ordinary:
        return flatten_children(t, path, depth);
      case Scenario::Symmetric: {
        const Tensor s = check_scenario(t, Scenario::Symmetric, tol_);
        const std::size_t step = open_step("symmetric_as_ordinary", path, depth, s);
        const bool ok = flatten_children(s, path, depth + 1);
        steps_[step].accepted = ok;
        return ok;
      }
      case Scenario::Alternating: {
        const Tensor s = check_scenario(t, Scenario::Alternating, tol_);
        const std::size_t n = s.dims()[0];
        const std::size_t probes = opts_.probes > 0 ? opts_.probes : std::max<std::size_t>(5, n);
        bool ok = true;
        for (std::size_t p = 0; p < probes; ++p) {
          const Vector v = rng_.unit_vector(n, s.field());
          const Tensor child = contraction_probe(s, v);
          const std::string child_path = path + "/probe" + std::to_string(p + 1);
          const std::size_t step = open_step("contraction_probe", child_path, depth, child);
          const bool child_ok = run(child, Scenario::Alternating, child_path, depth + 1);
          steps_[step].accepted = child_ok;
          ok = ok && child_ok;
        }
        return ok;
      }
    }
    return false;
  }

  Decision finish(Scenario scenario, Field field) {
    Decision d;
    d.scenario = scenario;
    d.field = field;
    d.tolerance = tol_;
    d.accepted = all_ok_;
    for (const auto& name : order_) d.residuals.push_back(worst_.at(name));
    d.notes = notes_;
    return d;
  }

  std::vector<ReductionStep> steps() const { return steps_; }

 private:
  std::size_t open_step(const std::string& rule, const std::string& path, std::size_t depth, const Tensor& t) {
    steps_.push_back({rule, path, depth, t.dims(), true});
    return steps_.size() - 1;
  }

  bool flatten_children(const Tensor& t, const std::string& path, std::size_t depth) {
    static const char* names[3] = {"i", "ii", "iii"};
    const auto flats = flattening_triple(t);
    bool ok = true;
    for (std::size_t i = 0; i < 3; ++i) {
      const std::string child_path = path + "/" + names[i];
      const std::size_t step = open_step(std::string("flattening_") + names[i], child_path, depth, flats[i]);
      const bool child_ok = run(flats[i], Scenario::Ordinary, child_path, depth + 1);
      steps_[step].accepted = child_ok;
      ok = ok && child_ok;
    }
    return ok;
  }

  bool leaf(const Tensor& t, Scenario scenario, const std::string& path, std::size_t depth) {
    const Decision d = decide(t, scenario, tol_, opts_.eval);
    open_step("order3_decide", path, depth, t);
    steps_.back().accepted = d.accepted;
    for (const auto& r : d.residuals) {
      auto it = worst_.find(r.identity);
      if (it == worst_.end()) {
        worst_.emplace(r.identity, r);
        order_.push_back(r.identity);
      } else if (r.normalized > it->second.normalized) {
        const std::size_t total = it->second.tuples_evaluated + r.tuples_evaluated;
        it->second = r;
        it->second.tuples_evaluated = total;
      } else {
        it->second.tuples_evaluated += r.tuples_evaluated;
      }
    }
    for (const auto& note : d.notes)
      if (std::find(notes_.begin(), notes_.end(), note) == notes_.end()) notes_.push_back(note);
    all_ok_ = all_ok_ && d.accepted;
    return d.accepted;
  }

  double tol_;
  ReduceOptions opts_;
  Rng rng_;
  std::vector<ReductionStep> steps_;
  std::map<std::string, ResidualReport> worst_;
  std::vector<std::string> order_;
  std::vector<std::string> notes_;
  bool all_ok_ = true;
};

}  // namespace

ReductionTrace decide_higher_order(const Tensor& t, Scenario scenario, double tolerance, const ReduceOptions& opts) {
  if (t.order() < 3) throw ShapeError("decide_higher_order: order >= 3 required");
  Reducer r(tolerance, opts);
  r.run(t, scenario, "root", 0);
  ReductionTrace trace;
  trace.steps = r.steps();
  trace.final = r.finish(scenario, t.field());
  return trace;
}

}  // namespace odeco
