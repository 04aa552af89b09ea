#include "odeco/cli.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include <CLI11.hpp>

#include "odeco/generate.hpp"
#include "odeco/golden.hpp"
#include "odeco/io.hpp"

namespace odeco::cli {

namespace {

using io::json;
using Clock = std::chrono::steady_clock;

struct Common {
  double tol = 1e-8;
  std::uint64_t seed = 0;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

json report_header(const std::vector<std::string>& args, const Common& c) {
  return {{"tool", "odeco"}, {"version", ODECO_VERSION}, {"command", args}, {"seed", c.seed}, {"tolerance", c.tol}};
}

void emit(const json& report, const std::string& path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty())
    out << text;
  else
    io::write_text(path, text);
}

ResidualReport golden_report(const std::string& name, cplx value, double tnorm) {
  ResidualReport r;
  r.identity = name;
  r.raw_max = std::abs(value);
  r.normalized = tnorm > 0.0 ? r.raw_max / (tnorm * tnorm * tnorm) : 0.0;
  r.tuples_evaluated = 1;
  return r;
}

// Every identity that makes sense for the file's scenario and shape.
std::vector<ResidualReport> all_residuals(const io::TensorFile& f, const EvalOptions& eval) {
  const Tensor& t = f.tensor;
  std::vector<ResidualReport> out;
  if (t.field() == Field::Real)
    for (std::size_t l = 0; l < t.order(); ++l) out.push_back(residual_star_symmetry(t, l));
  if (t.order() != 3) return out;
  out.push_back(residual_partial_associativity(t, eval));
  out.push_back(residual_partial_semi_associativity(t, eval));
  const double inf = std::numeric_limits<double>::infinity();
  if (f.scenario == Scenario::Symmetric) {
    const MulTable m = induce_symmetric(project_symmetric(t), inf);
    out.push_back(residual_associativity(m, eval));
    out.push_back(residual_semi_associativity(m, eval));
    if (t.dims() == std::vector<std::size_t>{2, 2, 2}) {
      const auto f4 = golden_sym2_quartics(t);
      for (std::size_t i = 0; i < 4; ++i) out.push_back(golden_report("golden_f" + std::to_string(i + 1), f4[i], t.norm()));
    }
  }
  if (f.scenario == Scenario::Alternating) {
    const Tensor s = project_alternating(t);
    const MulTable m = induce_alternating(s, inf);
    out.push_back(residual_jacobi(m, eval));
    out.push_back(residual_cross_first(m, eval));
    out.push_back(residual_cross_second(m, eval));
    out.push_back(residual_casimir(s, eval));
    if (t.dims() == std::vector<std::size_t>{6, 6, 6})
      out.push_back(golden_report("golden_alt6_cubic", golden_alt6_cubic(t), t.norm()));
  }
  return out;
}

int cmd_check(const std::vector<std::string>& args, const Common& c, const std::string& file, bool raw,
              std::size_t probes, const std::string& report_path, std::ostream& out) {
  const auto start = Clock::now();
  const io::TensorFile f = io::read_tensor_file(file, {.raw = raw});
  json report = report_header(args, c);
  EvalOptions eval;
  eval.seed = c.seed;
  bool accepted;
  if (f.tensor.order() == 3) {
    const Decision d = decide(f.tensor, f.scenario, c.tol, eval);
    report["decision"] = io::to_json(d);
    accepted = d.accepted;
  } else {
    ReduceOptions ro;
    ro.seed = c.seed;
    ro.probes = probes;
    ro.eval = eval;
    const ReductionTrace trace = decide_higher_order(f.tensor, f.scenario, c.tol, ro);
    report["decision"] = io::to_json(trace.final);
    report["trace"] = io::to_json(trace);
    accepted = trace.final.accepted;
  }
  report["timings"] = {{"total_seconds", seconds_since(start)}};
  emit(report, report_path, out);
  return accepted ? kOk : kRejected;
}

int cmd_decompose(const std::vector<std::string>& args, const Common& c, const std::string& file, bool raw,
                  const std::string& output, std::ostream& out) {
  const auto start = Clock::now();
  const io::TensorFile f = io::read_tensor_file(file, {.raw = raw});
  json report = report_header(args, c);
  DecomposeOptions opts;
  opts.seed = c.seed;
  int code = kOk;
  try {
    const Decomposition d = decompose(f.tensor, f.scenario, opts);
    const VerifyReport v = verify(f.tensor, d, c.tol);
    report["decomposition"] = io::to_json(d);
    report["verify"] = io::to_json(v);
    code = v.ok ? kOk : kRejected;
  } catch (const NotDecomposableError& e) {
    report["error"] = {{"kind", "not_decomposable"}, {"message", e.what()}};
    code = kRejected;
  } catch (const DegenerateError& e) {
    report["error"] = {{"kind", "degenerate"}, {"message", e.what()}};
    code = kDegenerate;
  }
  report["timings"] = {{"total_seconds", seconds_since(start)}};
  emit(report, output, out);
  out << (code == kOk ? "decomposed: verified\n" : code == kRejected ? "decomposed: rejected\n" : "decomposed: degenerate\n");
  return code;
}

int cmd_residuals(const std::vector<std::string>& args, const Common& c, const std::string& file, bool raw, bool all,
                  const std::string& report_path, std::ostream& out) {
  const auto start = Clock::now();
  const io::TensorFile f = io::read_tensor_file(file, {.raw = raw});
  EvalOptions eval;
  eval.seed = c.seed;
  json report = report_header(args, c);
  std::vector<ResidualReport> rs;
  if (all) {
    rs = all_residuals(f, eval);
  } else if (f.tensor.order() == 3) {
    rs = decide(f.tensor, f.scenario, c.tol, eval).residuals;
  } else {
    ReduceOptions ro;
    ro.seed = c.seed;
    ro.eval = eval;
    rs = decide_higher_order(f.tensor, f.scenario, c.tol, ro).final.residuals;
  }
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(io::to_json(r));
  report["residuals"] = arr;
  report["timings"] = {{"total_seconds", seconds_since(start)}};
  emit(report, report_path, out);
  return kOk;
}

int cmd_generate(const Common& c, SampleSpec spec, std::size_t n, std::size_t d, long long k,
                 const std::vector<double>& weights, const std::string& policy, double epsilon,
                 const std::string& output, std::ostream& out) {
  if (spec.dims.empty()) {
    if (n == 0) throw CLI::ValidationError("generate", "give --dims or --n");
    spec.dims.assign(d, n);
  }
  spec.seed = c.seed;
  spec.k = k < 0 ? max_terms(spec.scenario, spec.dims) : static_cast<std::size_t>(k);
  if (!weights.empty()) {
    spec.weight_policy = WeightPolicy::Explicit;
    spec.weights.assign(weights.begin(), weights.end());
  } else {
    spec.weight_policy = parse_weight_policy(policy);
    if (spec.weight_policy == WeightPolicy::Explicit) throw CLI::ValidationError("generate", "explicit policy needs --weights");
  }
  const GroundTruth g = sample(spec);
  io::TensorFile f;
  f.scenario = spec.scenario;
  if (epsilon > 0.0) {
    f.tensor = perturb(g, epsilon, c.seed + 1);
  } else {
    f.tensor = g.tensor;
    f.ground_truth = g.decomposition;
  }
  io::write_tensor_file(output, f);
  out << "wrote " << output << " (" << to_string(spec.scenario) << ", " << to_string(spec.field) << ", "
      << spec.k << " terms)\n";
  return kOk;
}

int cmd_dim(const Common& c, Scenario scenario, Field field, const std::vector<std::size_t>& shape, bool estimate,
            std::ostream& out) {
  std::vector<std::size_t> dims;
  if (scenario == Scenario::Ordinary) {
    dims = shape;
  } else {
    if (shape.empty() || shape.size() > 2) throw CLI::ValidationError("--shape", "expects N or N D");
    dims.assign(shape.size() == 2 ? shape[1] : 3, shape[0]);
  }
  out << variety_dimension(scenario, field, dims) << "\n";
  if (estimate) out << "estimate " << estimate_dimension(scenario, field, dims, c.seed) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide, decompose and sample orthogonally decomposable tensors", "odeco"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ODECO_VERSION));

  const CLI::IsMember kScenarios({"ordinary", "symmetric", "alternating"});
  const CLI::IsMember kFields({"real", "complex"});

  Common common;
  std::string file, output, report_path, policy = "distinct";
  bool raw = false, all = false, estimate = false;
  std::size_t probes = 0, n = 0, d = 3;
  long long k = -1;
  double epsilon = 0.0;
  std::vector<double> weights;
  std::vector<std::size_t> dims, shape;
  std::string scenario_name, field_name;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", common.tol, "Tolerance on normalized residuals")->check(CLI::PositiveNumber);
    sub->add_option("--seed", common.seed, "Random seed");
  };

  auto* check = app.add_subcommand("check", "Decide membership in the scenario's variety");
  check->add_option("file", file, "Tensor file")->required();
  check->add_flag("--raw", raw, "Skip the symmetry check on load");
  check->add_option("--probes", probes, "Probe vectors per alternating level (default max(5, n))");
  check->add_option("--report", report_path, "Write the report here instead of stdout");
  add_common(check);

  auto* dec = app.add_subcommand("decompose", "Compute and verify the orthogonal decomposition");
  dec->add_option("file", file, "Tensor file")->required();
  dec->add_option("-o,--output", output, "Report file")->required();
  dec->add_flag("--raw", raw, "Skip the symmetry check on load");
  add_common(dec);

  auto* gen = app.add_subcommand("generate", "Sample a decomposable tensor with its decomposition");
  gen->add_option("--scenario", scenario_name)->required()->check(kScenarios);
  gen->add_option("--field", field_name)->required()->check(kFields);
  gen->add_option("--dims", dims, "Slot dimensions (ordinary)");
  gen->add_option("--n", n, "Dimension (symmetric, alternating)");
  gen->add_option("--d", d, "Order (with --n)");
  gen->add_option("--k", k, "Number of terms (default: maximal)");
  gen->add_option("--weights", weights, "Explicit weights");
  gen->add_option("--weight-policy", policy, "distinct | equal | explicit")
      ->check(CLI::IsMember({"distinct", "equal", "explicit"}));
  gen->add_option("--perturb", epsilon, "Relative size of added noise (drops the ground truth)");
  gen->add_option("-o,--output", output, "Tensor file to write")->required();
  add_common(gen);

  auto* res = app.add_subcommand("residuals", "Report identity residuals");
  res->add_option("file", file, "Tensor file")->required();
  res->add_flag("--all", all, "Every applicable identity, including the hard-coded polynomials");
  res->add_flag("--raw", raw, "Skip the symmetry check on load");
  res->add_option("--report", report_path, "Write the report here instead of stdout");
  add_common(res);

  auto* dim = app.add_subcommand("dim", "Dimension of the variety");
  dim->add_option("--scenario", scenario_name)->required()->check(kScenarios);
  dim->add_option("--field", field_name)->required()->check(kFields);
  dim->add_option("--shape", shape, "ordinary: n1 .. nd (ascending); symmetric/alternating: N [D]")->required();
  dim->add_flag("--estimate", estimate, "Also report the Jacobian-rank estimate");
  add_common(dim);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  std::vector<std::string> echo{"odeco"};
  echo.insert(echo.end(), args.begin(), args.end());
  try {
    if (check->parsed()) return cmd_check(echo, common, file, raw, probes, report_path, out);
    if (dec->parsed()) return cmd_decompose(echo, common, file, raw, output, out);
    if (res->parsed()) return cmd_residuals(echo, common, file, raw, all, report_path, out);
    if (gen->parsed()) {
      SampleSpec spec;
      spec.scenario = parse_scenario(scenario_name);
      spec.field = parse_field(field_name);
      spec.dims = dims;
      return cmd_generate(common, spec, n, d, k, weights, policy, epsilon, output, out);
    }
    if (dim->parsed()) return cmd_dim(common, parse_scenario(scenario_name), parse_field(field_name), shape, estimate, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotDecomposableError& e) {
    err << "error: " << e.what() << "\n";
    return kRejected;
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}

}  // namespace odeco::cli
