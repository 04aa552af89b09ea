#include "odeco/common.hpp"

#include <cmath>

namespace odeco {

std::string_view to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

Field parse_field(std::string_view s) {
  if (s == "real") return Field::Real;
  if (s == "complex") return Field::Complex;
  throw FieldError("unknown field '" + std::string(s) + "' (expected real or complex)");
}

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::Ordinary: return "ordinary";
    case Scenario::Symmetric: return "symmetric";
    case Scenario::Alternating: return "alternating";
  }
  return "ordinary";
}

Scenario parse_scenario(std::string_view s) {
  if (s == "ordinary") return Scenario::Ordinary;
  if (s == "symmetric") return Scenario::Symmetric;
  if (s == "alternating") return Scenario::Alternating;
  throw ScenarioError("unknown scenario '" + std::string(s) + "' (expected ordinary, symmetric or alternating)");
}

cplx dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw ShapeError("dot: length mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

double norm(const Vector& x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

Vector scaled(const Vector& x, cplx s) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i];
  return out;
}

Vector conjugated(const Vector& x) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::conj(x[i]);
  return out;
}

bool has_imaginary(const Vector& x) {
  for (const auto& v : x)
    if (v.imag() != 0.0) return true;
  return false;
}

Vector basis_vector(std::size_t n, std::size_t i) {
  if (i >= n) throw ShapeError("basis_vector: index out of range");
  Vector e(n, 0.0);
  e[i] = 1.0;
  return e;
}

}  // namespace odeco
