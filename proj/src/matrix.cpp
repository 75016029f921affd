#include "facschur/matrix.hpp"

#include "facschur/error.hpp"

#include <bit>
#include <cstdint>

namespace facschur {

Poly det_poly(const PolyMatrix& matrix) {
  const std::size_t size = matrix.size();
  for (const auto& row : matrix)
    if (row.size() != size) throw NonSquare("determinant of a non-square matrix");
  if (size == 0) return Poly(1);
  if (size > 20) throw PreconditionViolated("determinant dimension too large for subset memoization");

  // minors[S] = det of rows 0..|S|-1 restricted to the columns in S.
  const std::uint32_t full = (1u << size) - 1;
  std::vector<Poly> minors(full + 1);
  minors[0] = Poly(1);
  for (std::uint32_t cols = 1; cols <= full; ++cols) {
    const std::size_t row = std::popcount(cols) - 1;
    Poly acc;
    // Expand along the last row of the minor; the cofactor sign is
    // (-1)^{row + position of the column inside the subset}.
    int position = 0;
    for (std::size_t col = 0; col < size; ++col) {
      if (!(cols & (1u << col))) continue;
      const Poly& entry = matrix[row][col];
      const Poly& minor = minors[cols & ~(1u << col)];
      if (!entry.is_zero() && !minor.is_zero()) {
        Poly term = entry * minor;
        if ((row + position) % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      ++position;
    }
    minors[cols] = std::move(acc);
  }
  return minors[full];
}

} // namespace facschur
