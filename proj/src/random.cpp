#include "odeco/random.hpp"

#include <cmath>
#include <numbers>

namespace odeco {

cplx Rng::gaussian(Field field) {
  if (field == Field::Real) return normal();
  const double re = normal();
  const double im = normal();
  return cplx(re, im) * std::numbers::sqrt2 * 0.5;
}

Vector Rng::gaussian_vector(std::size_t n, Field field) {
  Vector v(n);
  for (auto& x : v) x = gaussian(field);
  return v;
}

Vector Rng::unit_vector(std::size_t n, Field field) {
  while (true) {
    Vector v = gaussian_vector(n, field);
    const double nv = norm(v);
    if (nv > 1e-12) return scaled(v, 1.0 / nv);
  }
}

cplx Rng::unit_scalar(Field field) {
  if (field == Field::Real) return uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
  return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi));
}

}  // namespace odeco
