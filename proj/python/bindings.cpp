#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "odeco/decompose.hpp"
#include "odeco/generate.hpp"
#include "odeco/identities.hpp"
#include "odeco/io.hpp"
#include "odeco/reduce.hpp"

namespace py = pybind11;
using namespace odeco;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

Tensor to_tensor(const py::array& input) {
  const bool complex = input.dtype().kind() == 'c';
  const CArray a = CArray::ensure(input);
  if (!a) throw ShapeError("expected a numeric array");
  std::vector<std::size_t> dims(a.shape(), a.shape() + a.ndim());
  std::vector<cplx> data(a.data(), a.data() + a.size());
  return Tensor(std::move(dims), std::move(data), complex ? Field::Complex : Field::Real);
}

py::array to_array(const std::vector<cplx>& data, const std::vector<std::size_t>& dims, Field field) {
  std::vector<py::ssize_t> shape(dims.begin(), dims.end());
  if (field == Field::Complex) {
    py::array_t<cplx> out(shape);
    std::copy(data.begin(), data.end(), out.mutable_data());
    return out;
  }
  py::array_t<double> out(shape);
  double* p = out.mutable_data();
  for (std::size_t i = 0; i < data.size(); ++i) p[i] = data[i].real();
  return out;
}

py::array to_array(const Tensor& t) { return to_array(t.entries(), t.dims(), t.field()); }

py::list terms_of(const Decomposition& d) {
  py::list terms;
  for (const auto& term : d.terms) {
    py::list vectors;
    for (const Vector& v : term.vectors) vectors.append(to_array(v, {v.size()}, d.field));
    py::object weight = d.field == Field::Real ? py::object(py::float_(term.weight.real())) : py::cast(term.weight);
    terms.append(py::make_tuple(weight, vectors));
  }
  return terms;
}

Decomposition from_terms(Scenario s, const Tensor& t, const py::list& terms) {
  Decomposition d;
  d.scenario = s;
  d.field = t.field();
  d.dims = t.dims();
  for (const auto& item : terms) {
    const auto pair = item.cast<py::tuple>();
    DecompositionTerm term;
    term.weight = pair[0].cast<cplx>();
    for (const auto& v : pair[1].cast<py::list>()) term.vectors.push_back(to_tensor(v.cast<py::array>()).entries());
    d.terms.push_back(std::move(term));
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orthogonally and unitarily decomposable tensors";
  m.attr("__version__") = ODECO_VERSION;

  py::register_exception<Error>(m, "OdecoError", PyExc_RuntimeError);
  py::register_exception<NotDecomposableError>(m, "NotDecomposableError", m.attr("OdecoError").ptr());
  py::register_exception<DegenerateError>(m, "DegenerateError", m.attr("OdecoError").ptr());

  m.def(
      "decide_json",
      [](const py::array& a, const std::string& scenario, double tol, std::uint64_t seed, std::size_t probes) {
        const Tensor t = to_tensor(a);
        const Scenario s = parse_scenario(scenario);
        EvalOptions eval;
        eval.seed = seed;
        if (t.order() == 3) return io::to_json(decide(t, s, tol, eval)).dump();
        ReduceOptions opts;
        opts.seed = seed;
        opts.probes = probes;
        opts.eval = eval;
        return io::to_json(decide_higher_order(t, s, tol, opts)).dump();
      },
      py::arg("tensor"), py::arg("scenario"), py::arg("tol") = 1e-8, py::arg("seed") = 0, py::arg("probes") = 0);

  m.def(
      "decompose",
      [](const py::array& a, const std::string& scenario, std::uint64_t seed) {
        DecomposeOptions opts;
        opts.seed = seed;
        return terms_of(decompose(to_tensor(a), parse_scenario(scenario), opts));
      },
      py::arg("tensor"), py::arg("scenario"), py::arg("seed") = 0,
      "List of (weight, [vectors]) terms; raises NotDecomposableError or DegenerateError.");

  m.def(
      "verify_json",
      [](const py::array& a, const std::string& scenario, const py::list& terms, double tol) {
        const Tensor t = to_tensor(a);
        return io::to_json(verify(t, from_terms(parse_scenario(scenario), t, terms), tol)).dump();
      },
      py::arg("tensor"), py::arg("scenario"), py::arg("terms"), py::arg("tol") = 1e-8);

  m.def(
      "sample",
      [](const std::string& scenario, const std::string& field, std::vector<std::size_t> dims, std::size_t k,
         const std::string& weight_policy, std::vector<cplx> weights, std::uint64_t seed) {
        SampleSpec spec;
        spec.scenario = parse_scenario(scenario);
        spec.field = parse_field(field);
        spec.dims = std::move(dims);
        spec.k = k == 0 ? max_terms(spec.scenario, spec.dims) : k;
        spec.weight_policy = parse_weight_policy(weight_policy);
        spec.weights = std::move(weights);
        spec.seed = seed;
        const GroundTruth g = sample(spec);
        return py::make_tuple(to_array(g.tensor), terms_of(g.decomposition));
      },
      py::arg("scenario"), py::arg("field"), py::arg("dims"), py::arg("k") = 0, py::arg("weight_policy") = "distinct",
      py::arg("weights") = std::vector<cplx>{}, py::arg("seed") = 0, "k = 0 draws the maximal number of terms.");

  m.def("variety_dimension", [](const std::string& s, const std::string& f, std::vector<std::size_t> dims) {
    return variety_dimension(parse_scenario(s), parse_field(f), dims);
  });
  m.def(
      "estimate_dimension",
      [](const std::string& s, const std::string& f, std::vector<std::size_t> dims, std::uint64_t seed) {
        return estimate_dimension(parse_scenario(s), parse_field(f), dims, seed);
      },
      py::arg("scenario"), py::arg("field"), py::arg("dims"), py::arg("seed") = 0);
  m.def("max_terms", [](const std::string& s, std::vector<std::size_t> dims) {
    return max_terms(parse_scenario(s), dims);
  });
  m.def("project_symmetric", [](const py::array& a) { return to_array(project_symmetric(to_tensor(a))); });
  m.def("project_alternating", [](const py::array& a) { return to_array(project_alternating(to_tensor(a))); });
}
