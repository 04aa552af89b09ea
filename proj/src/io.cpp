#include "odeco/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace odeco::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw FileError(where + ": " + what);
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

cplx complex_from(const json& j, const std::string& where) {
  if (j.is_number()) return number(j, where);
  if (!j.is_array() || j.size() != 2) fail(where, "expected [re, im]");
  return {number(j[0], where + "/0"), number(j[1], where + "/1")};
}

std::vector<std::size_t> dims_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of dimensions");
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& v = j[i];
    if (!v.is_number_integer() || v.get<long long>() < 1)
      fail(where + "/" + std::to_string(i), "dimension must be a positive integer");
    dims.push_back(v.get<std::size_t>());
  }
  return dims;
}

}  // namespace

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(complex_json(x));
  return out;
}

json to_json(const Decomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    json vs = json::array();
    for (const auto& v : t.vectors) vs.push_back(vector_json(v));
    terms.push_back({{"weight", complex_json(t.weight)}, {"vectors", vs}});
  }
  json dims = json::array();
  for (auto n : d.dims) dims.push_back(n);
  return {{"scenario", to_string(d.scenario)}, {"field", to_string(d.field)}, {"dims", dims}, {"terms", terms}};
}

Decomposition decomposition_from_json(const json& j, Field field, const std::vector<std::size_t>& dims) {
  const std::string where = "/ground_truth";
  if (!j.is_object()) fail(where, "expected an object");
  Decomposition d;
  d.scenario = parse_scenario(member(j, "scenario", where).get<std::string>());
  d.field = field;
  d.dims = dims;
  const json& terms = member(j, "terms", where);
  if (!terms.is_array()) fail(where + "/terms", "expected an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tw = where + "/terms/" + std::to_string(i);
    DecompositionTerm term;
    term.weight = complex_from(member(terms[i], "weight", tw), tw + "/weight");
    const json& vs = member(terms[i], "vectors", tw);
    if (!vs.is_array()) fail(tw + "/vectors", "expected an array");
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const std::string vw = tw + "/vectors/" + std::to_string(k);
      if (!vs[k].is_array()) fail(vw, "expected an array of [re, im]");
      Vector v;
      for (std::size_t e = 0; e < vs[k].size(); ++e) v.push_back(complex_from(vs[k][e], vw + "/" + std::to_string(e)));
      const std::size_t expect = d.scenario == Scenario::Ordinary ? dims.at(std::min(k, dims.size() - 1)) : dims[0];
      if (v.size() != expect) fail(vw, "vector length does not match the dimensions");
      if (field == Field::Real && has_imaginary(v)) fail(vw, "imaginary part in a real file");
      term.vectors.push_back(std::move(v));
    }
    d.terms.push_back(std::move(term));
  }
  return d;
}

TensorFile parse_tensor_file(const std::string& text, const LoadOptions& opts) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FileError("malformed JSON at " + line_col(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object()) fail("/", "expected a JSON object");
  TensorFile f;
  Field field;
  try {
    field = parse_field(member(j, "field", "/").get<std::string>());
    f.scenario = parse_scenario(member(j, "scenario", "/").get<std::string>());
  } catch (const json::exception&) {
    fail("/", "field and scenario must be strings");
  } catch (const FieldError& e) {
    fail("/field", e.what());
  } catch (const ScenarioError& e) {
    fail("/scenario", e.what());
  }
  const std::vector<std::size_t> dims = dims_from(member(j, "dims", "/"), "/dims");
  Tensor t(dims, Field::Complex);
  const json& entries = member(j, "entries", "/");
  if (!entries.is_array()) fail("/entries", "expected an array");
  std::map<std::size_t, std::size_t> seen;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string where = "/entries/" + std::to_string(e);
    const json& entry = entries[e];
    if (!entry.is_array() || entry.size() != 3) fail(where, "expected [index, re, im]");
    const json& idx = entry[0];
    if (!idx.is_array() || idx.size() != dims.size())
      fail(where, "index must list " + std::to_string(dims.size()) + " positions");
    std::vector<std::size_t> zero_based;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (!idx[k].is_number_integer()) fail(where, "index positions must be integers");
      const long long v = idx[k].get<long long>();
      if (v < 1 || static_cast<std::size_t>(v) > dims[k])
        fail(where, "index " + idx.dump() + " is out of range for dims " + member(j, "dims", "/").dump());
      zero_based.push_back(static_cast<std::size_t>(v - 1));
    }
    const double re = number(entry[1], where + "/1");
    const double im = number(entry[2], where + "/2");
    if (field == Field::Real && im != 0.0) fail(where, "nonzero imaginary part in a real file");
    const std::size_t off = t.offset(zero_based);
    auto [it, inserted] = seen.emplace(off, e);
    if (!inserted) fail(where, "duplicate index " + idx.dump() + " (first given at /entries/" + std::to_string(it->second) + ")");
    t[off] = cplx(re, im);
  }
  f.tensor = t.with_field(field);
  if (!opts.raw && f.scenario != Scenario::Ordinary) {
    if (!f.tensor.is_cubical()) fail("/dims", "symmetric and alternating tensors need equal dimensions");
    const double defect = f.scenario == Scenario::Symmetric ? symmetric_defect(f.tensor) : alternating_defect(f.tensor);
    if (defect > opts.projector_tol) {
      std::ostringstream os;
      os << "tensor is not " << to_string(f.scenario) << " (relative projector distance " << defect
         << "); pass --raw to skip this check";
      fail("/entries", os.str());
    }
  }
  if (auto it = j.find("ground_truth"); it != j.end()) {
    try {
      f.ground_truth = decomposition_from_json(*it, field, dims);
    } catch (const json::exception& e) {
      fail("/ground_truth", e.what());
    } catch (const ScenarioError& e) {
      fail("/ground_truth/scenario", e.what());
    }
  }
  return f;
}

TensorFile read_tensor_file(const std::string& path, const LoadOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_tensor_file(ss.str(), opts);
  } catch (const FileError& e) {
    throw FileError(path + ": " + e.what());
  }
}

json to_json(const TensorFile& f) {
  const Tensor& t = f.tensor;
  json dims = json::array();
  for (auto n : t.dims()) dims.push_back(n);
  json entries = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0.0) continue;
    json idx = json::array();
    for (auto k : t.unravel(i)) idx.push_back(k + 1);
    entries.push_back(json::array({idx, t[i].real(), t[i].imag()}));
  }
  json out = {{"field", to_string(t.field())}, {"scenario", to_string(f.scenario)}, {"dims", dims}, {"entries", entries}};
  if (f.ground_truth) out["ground_truth"] = to_json(*f.ground_truth);
  return out;
}

std::string serialize(const TensorFile& f) { return to_json(f).dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write '" + path + "'");
  out << text;
  if (!out) throw FileError("write to '" + path + "' failed");
}

void write_tensor_file(const std::string& path, const TensorFile& f) { write_text(path, serialize(f)); }

MulTable read_structure_constants(const std::string& path) {
  const TensorFile f = read_tensor_file(path, {.raw = true});
  if (f.tensor.order() != 3 || !f.tensor.is_cubical()) throw FileError(path + ": structure constants need an n x n x n tensor");
  return table_from_tensor(f.tensor, f.tensor.field() == Field::Complex, f.scenario == Scenario::Alternating);
}

json to_json(const ResidualReport& r) {
  json tuple = json::array();
  for (auto k : r.worst_tuple) tuple.push_back(k + 1);
  return {{"identity", r.identity},
          {"raw_max", r.raw_max},
          {"normalized", r.normalized},
          {"tuples_evaluated", r.tuples_evaluated},
          {"mode", to_string(r.mode)},
          {"worst_tuple", tuple}};
}

json to_json(const Decision& d) {
  json residuals = json::array();
  for (const auto& r : d.residuals) residuals.push_back(to_json(r));
  json out = {{"scenario", to_string(d.scenario)},
              {"field", to_string(d.field)},
              {"tolerance", d.tolerance},
              {"accepted", d.accepted},
              {"residuals", residuals}};
  if (!d.notes.empty()) out["notes"] = d.notes;
  return out;
}

json to_json(const VerifyReport& v) {
  return {{"reconstruction_error", v.reconstruction_error},
          {"max_orthogonality_defect", v.max_orthogonality_defect},
          {"term_count", v.term_count},
          {"ok", v.ok}};
}

json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back(
        {{"rule", s.rule}, {"path", s.path}, {"depth", s.depth}, {"shape", s.shape}, {"accepted", s.accepted}});
  return {{"steps", steps}, {"final", to_json(t.final)}};
}

}  // namespace odeco::io
