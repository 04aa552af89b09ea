#include "odeco/golden.hpp"

namespace odeco {

std::array<cplx, 4> golden_sym2_quartics(const Tensor& t) {
  if (t.dims() != std::vector<std::size_t>{2, 2, 2}) throw ShapeError("golden_sym2_quartics: 2x2x2 tensor required");
  const cplx a = t[0];  // t_111
  const cplx b = t[1];  // t_112
  const cplx c = t[3];  // t_122
  const cplx e = t[7];  // t_222
  const cplx ab = std::conj(a), bb = std::conj(b), cb = std::conj(c), eb = std::conj(e);

  const cplx f1 = -c * c * cb + e * b * cb - c * cb * cb - c * b * bb + e * a * bb + c * eb * bb - b * cb * bb -
                  a * bb * bb - b * b * ab + c * a * ab + b * eb * ab + a * cb * ab;
  const cplx f2 = -c * c * cb + e * b * cb + c * cb * cb - c * b * bb + e * a * bb - c * eb * bb + b * cb * bb +
                  a * bb * bb - b * b * ab + c * a * ab - b * eb * ab - a * cb * ab;
  const cplx f3 = -c * c * eb + e * b * eb - c * b * cb + e * a * cb - e * cb * cb - b * b * bb + c * a * bb +
                  e * eb * bb - c * cb * bb - b * bb * bb + c * eb * ab + b * cb * ab;
  const cplx f4 = -c * c * eb + e * b * eb - c * b * cb + e * a * cb + e * cb * cb - b * b * bb + c * a * bb -
                  e * eb * bb + c * cb * bb + b * bb * bb - c * eb * ab - b * cb * ab;
  return {f1, f2, f3, f4};
}

cplx golden_alt6_cubic(const Tensor& t) {
  if (t.dims() != std::vector<std::size_t>{6, 6, 6}) throw ShapeError("golden_alt6_cubic: 6x6x6 tensor required");
  // 1-based subscripts as usually written.
  auto x = [&](std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t idx[3] = {i - 1, j - 1, k - 1};
    return t.at(idx);
  };
  auto xb = [&](std::size_t i, std::size_t j, std::size_t k) { return std::conj(x(i, j, k)); };
  return x(1, 4, 5) * x(2, 3, 4) * xb(1, 3, 5) - x(1, 3, 4) * x(2, 4, 5) * xb(1, 3, 5) +
         x(1, 2, 4) * x(3, 4, 5) * xb(1, 3, 5) + x(1, 4, 6) * x(2, 3, 4) * xb(1, 3, 6) -
         x(1, 3, 4) * x(2, 4, 6) * xb(1, 3, 6) + x(1, 2, 4) * x(3, 4, 6) * xb(1, 3, 6) -
         x(1, 4, 6) * x(2, 4, 5) * xb(1, 5, 6) + x(1, 4, 5) * x(2, 4, 6) * xb(1, 5, 6) -
         x(1, 2, 4) * x(4, 5, 6) * xb(1, 5, 6) + x(2, 4, 6) * x(3, 4, 5) * xb(3, 5, 6) -
         x(2, 4, 5) * x(3, 4, 6) * xb(3, 5, 6) + x(2, 3, 4) * x(4, 5, 6) * xb(3, 5, 6);
}

}  // namespace odeco
