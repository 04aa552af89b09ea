#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "odeco/algebra.hpp"
#include "odeco/decompose.hpp"
#include "odeco/identities.hpp"
#include "odeco/reduce.hpp"
#include "odeco/tensor.hpp"

namespace odeco::io {

using nlohmann::json;

/// Unreadable file, malformed JSON, or a schema violation.
class FileError : public Error {
 public:
  using Error::Error;
};

/// Tensor interchange record. Indices are 1-based in the file.
struct TensorFile {
  Scenario scenario = Scenario::Ordinary;
  Tensor tensor;
  std::optional<Decomposition> ground_truth;
};

struct LoadOptions {
  /// Skip the symmetric/alternating projector check.
  bool raw = false;
  double projector_tol = 1e-8;
};

TensorFile parse_tensor_file(const std::string& text, const LoadOptions& opts = {});
TensorFile read_tensor_file(const std::string& path, const LoadOptions& opts = {});

json to_json(const TensorFile& f);
std::string serialize(const TensorFile& f);
void write_text(const std::string& path, const std::string& text);
void write_tensor_file(const std::string& path, const TensorFile& f);

/// Structure constants stored as an order-3 tensor file. Alternating files
/// yield an antisymmetric table; complex files a semilinear one.
MulTable read_structure_constants(const std::string& path);

json complex_json(cplx z);
json vector_json(const Vector& v);
json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j, Field field, const std::vector<std::size_t>& dims);
json to_json(const ResidualReport& r);
json to_json(const Decision& d);
json to_json(const VerifyReport& v);
json to_json(const ReductionTrace& t);

}  // namespace odeco::io
