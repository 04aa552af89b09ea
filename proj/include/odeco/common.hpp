#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace odeco {

using cplx = std::complex<double>;

/// Dense vector over the tensor's field. Real data carries zero imaginary parts.
using Vector = std::vector<cplx>;

enum class Field { Real, Complex };

std::string_view to_string(Field f);
Field parse_field(std::string_view s);

/// Which decomposition model a tensor is read against.
enum class Scenario { Ordinary, Symmetric, Alternating };

std::string_view to_string(Scenario s);
Scenario parse_scenario(std::string_view s);

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension, index, or partition mismatch.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Real-tagged data carrying imaginary parts, or mixed-field operands.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Input does not lie in the required symmetry class (symmetric, alternating, Hermitian).
class ScenarioError : public Error {
 public:
  using Error::Error;
};

/// An iterative kernel did not reach its tolerance within the sweep limit.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class RankDeficientError : public Error {
 public:
  RankDeficientError(const std::string& what, std::size_t numerical_rank)
      : Error(what), rank_(numerical_rank) {}
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

/// Randomized separation failed on every retry (coinciding singular values).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Structural evidence that the input has no orthogonal decomposition.
class NotDecomposableError : public Error {
 public:
  using Error::Error;
};

// Small vector helpers shared across modules.

/// Hermitian inner product (x|y) = sum x_a conj(y_a).
cplx dot(const Vector& x, const Vector& y);
double norm(const Vector& x);
Vector scaled(const Vector& x, cplx s);
Vector conjugated(const Vector& x);
bool has_imaginary(const Vector& x);
Vector basis_vector(std::size_t n, std::size_t i);

}  // namespace odeco
