#pragma once

#include "facschur/poly.hpp"

#include <vector>

namespace facschur {

using PolyMatrix = std::vector<std::vector<Poly>>;

// Exact determinant by Laplace expansion along rows, memoized over the set of
// columns already used. Throws NonSquare for ragged or non-square input.
Poly det_poly(const PolyMatrix& matrix);

} // namespace facschur
