#ifndef QALEX_BURAU_HPP
#define QALEX_BURAU_HPP

#include <cstdlib>
#include <vector>

#include "qalex/braid.hpp"
#include "qalex/linalg.hpp"

namespace qalex {

// Unreduced Burau image of a single generator, U_i = I_{i-1} + U + I_{n-i-1}
// with U = [[1 - t, t], [1, 0]]; negative letters give U_i^{-1}.
LaurentMatrix burau_generator(int letter, int strands);

// Product of generator images in word order. psi(empty) = I_n.
LaurentMatrix psi_unreduced(const BraidWord& b);

/// Right-multiplies `m` in place by the image of one generator, given the
/// ring elements standing for t and t^{-1}. Shared by the Laurent and the
/// truncated-series evaluations of the Burau kernel.
template <CoefficientRing R>
void multiply_by_generator(RingMatrix<R>& m, int letter, const R& t, const R& t_inv) {
  const std::size_t j = static_cast<std::size_t>(std::abs(letter) - 1);
  const R one = one_like(m.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const R left = m(i, j);
    const R right = m(i, j + 1);
    if (letter > 0) {
      // [[1 - t, t], [1, 0]]
      m(i, j) = left * (one - t) + right;
      m(i, j + 1) = left * t;
    } else {
      // [[0, 1], [t^{-1}, 1 - t^{-1}]]
      m(i, j) = right * t_inv;
      m(i, j + 1) = left + right * (one - t_inv);
    }
  }
}

// C_k = sum_{i <= j} E_{i,j} and its inverse I_k - sum E_{i,i+1}.
LaurentMatrix c_matrix(int k);
LaurentMatrix c_matrix_inverse(int k);

struct BurauBlocks {
  LaurentMatrix hat;              // (n-1) x (n-1) upper-left block
  std::vector<LaurentPoly> b_col;  // last column without the corner
  std::vector<LaurentPoly> c_row;  // last row without the corner
  LaurentPoly d;                   // corner entry
};

struct ReducedBurau {
  LaurentMatrix matrix;                // psi^r_n(beta), (n-1) x (n-1)
  std::vector<LaurentPoly> star_row;  // bottom-left row of the conjugated matrix
};

// Splits psi_n(beta) at row/column n. Requires n >= 2.
BurauBlocks block_decompose(const BraidWord& b);

// Reassembles the n x n matrix from its blocks.
LaurentMatrix assemble(const BurauBlocks& blocks);

// Conjugates psi_n(beta) by C_n and reads off the reduced representation.
// Throws ConsistencyError unless the last column is exactly (0, ..., 0, 1)^T.
ReducedBurau reduced_burau(const BraidWord& b);

// (1 - t^n) * star = sum_i (t^i - 1) a_i, a_i the rows of psi^r - I.
bool row_relation_check(const BraidWord& b);

}  // namespace qalex

#endif  // QALEX_BURAU_HPP
