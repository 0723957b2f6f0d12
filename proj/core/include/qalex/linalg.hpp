#ifndef QALEX_LINALG_HPP
#define QALEX_LINALG_HPP

#include "qalex/laurent.hpp"
#include "qalex/matrix.hpp"
#include "qalex/series.hpp"

namespace qalex {

using LaurentMatrix = RingMatrix<LaurentPoly>;
using SeriesMatrix = RingMatrix<TruncSeries>;

inline LaurentMatrix laurent_matrix(std::size_t rows, std::size_t cols) {
  return LaurentMatrix(rows, cols, LaurentPoly());
}
inline LaurentMatrix laurent_identity(std::size_t n) {
  return LaurentMatrix::identity(n, LaurentPoly());
}

// Exact determinant. Each row is multiplied by the inverse of its lowest
// t-power so that entries become ordinary polynomials, the polynomial
// determinant is taken by fraction-free (Bareiss) elimination, and the
// extracted monomial is restored. det of the 0x0 matrix is 1.
LaurentPoly laurent_det(const LaurentMatrix& m);

// Classical adjugate: adj(m)(j, i) = (-1)^{i+j} det(minor(m, i, j)).
LaurentMatrix laurent_adjugate(const LaurentMatrix& m);

// Entrywise t = (1 + hbar)^{-1}.
SeriesMatrix t_to_hbar(const LaurentMatrix& m, int order);

}  // namespace qalex

#endif  // QALEX_LINALG_HPP
