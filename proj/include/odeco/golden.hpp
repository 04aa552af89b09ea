#pragma once

#include <array>

#include "odeco/common.hpp"
#include "odeco/tensor.hpp"

namespace odeco {

/// The four real quartics cutting out symmetrically udeco 2x2x2 tensors,
/// hard-coded in the coordinates t30 = t_111, t21 = t_112, t12 = t_122,
/// t03 = t_222. Requires a symmetric 2x2x2 tensor.
std::array<cplx, 4> golden_sym2_quartics(const Tensor& t);

/// A cubic vanishing on alternatingly udeco tensors in Alt_3(C^6).
cplx golden_alt6_cubic(const Tensor& t);

}  // namespace odeco
