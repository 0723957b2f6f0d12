#include "qalex/burau.hpp"

#include "qalex/errors.hpp"

namespace qalex {

namespace {

const LaurentPoly& t_poly() {
  static const LaurentPoly t = LaurentPoly::t();
  return t;
}

const LaurentPoly& t_inv_poly() {
  static const LaurentPoly t_inv = LaurentPoly::monomial(-1);
  return t_inv;
}

void require_two_strands(const BraidWord& b) {
  if (b.strands() < 2) throw PreconditionError("operation requires at least two strands");
}

}  // namespace

LaurentMatrix burau_generator(int letter, int strands) {
  LaurentMatrix m = laurent_identity(static_cast<std::size_t>(strands));
  multiply_by_generator(m, BraidWord(strands, {letter}).letters().front(), t_poly(), t_inv_poly());
  return m;
}

LaurentMatrix psi_unreduced(const BraidWord& b) {
  LaurentMatrix m = laurent_identity(static_cast<std::size_t>(b.strands()));
  for (int l : b.letters()) multiply_by_generator(m, l, t_poly(), t_inv_poly());
  return m;
}

LaurentMatrix c_matrix(int k) {
  if (k < 1) throw PreconditionError("C_k needs k >= 1");
  const auto n = static_cast<std::size_t>(k);
  LaurentMatrix c = laurent_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) c(i, j) = LaurentPoly(1);
  return c;
}

LaurentMatrix c_matrix_inverse(int k) {
  if (k < 1) throw PreconditionError("C_k needs k >= 1");
  const auto n = static_cast<std::size_t>(k);
  LaurentMatrix c = laurent_identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = LaurentPoly(-1);
  return c;
}

BurauBlocks block_decompose(const BraidWord& b) {
  require_two_strands(b);
  const LaurentMatrix psi = psi_unreduced(b);
  const std::size_t k = psi.rows() - 1;
  BurauBlocks out{psi.block(0, 0, k, k), {}, {}, psi(k, k)};
  for (std::size_t i = 0; i < k; ++i) {
    out.b_col.push_back(psi(i, k));
    out.c_row.push_back(psi(k, i));
  }
  return out;
}

LaurentMatrix assemble(const BurauBlocks& blocks) {
  const std::size_t k = blocks.hat.rows();
  if (blocks.b_col.size() != k || blocks.c_row.size() != k) throw DimensionError("inconsistent Burau blocks");
  LaurentMatrix m = laurent_matrix(k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = blocks.hat(i, j);
    m(i, k) = blocks.b_col[i];
    m(k, i) = blocks.c_row[i];
  }
  m(k, k) = blocks.d;
  return m;
}

ReducedBurau reduced_burau(const BraidWord& b) {
  require_two_strands(b);
  const int n = b.strands();
  const LaurentMatrix conj = c_matrix_inverse(n) * psi_unreduced(b) * c_matrix(n);
  const std::size_t k = static_cast<std::size_t>(n - 1);
  for (std::size_t i = 0; i < k; ++i)
    if (!conj(i, k).is_zero())
      throw ConsistencyError("conjugated Burau matrix of '" + b.to_string() + "' has a nonzero last column");
  if (!(conj(k, k) == LaurentPoly(1)))
    throw ConsistencyError("conjugated Burau matrix of '" + b.to_string() + "' has corner " + conj(k, k).to_string());
  ReducedBurau out{conj.block(0, 0, k, k), {}};
  for (std::size_t j = 0; j < k; ++j) out.star_row.push_back(conj(k, j));
  return out;
}

bool row_relation_check(const BraidWord& b) {
  const ReducedBurau red = reduced_burau(b);
  const int n = b.strands();
  const std::size_t k = red.matrix.rows();
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly lhs_factor = LaurentPoly(1) - t.pow(static_cast<unsigned>(n));
  for (std::size_t j = 0; j < k; ++j) {
    LaurentPoly rhs;
    for (std::size_t i = 0; i < k; ++i) {
      LaurentPoly a_ij = red.matrix(i, j);
      if (i == j) a_ij -= LaurentPoly(1);
      rhs += (t.pow(static_cast<unsigned>(i + 1)) - LaurentPoly(1)) * a_ij;
    }
    if (!(lhs_factor * red.star_row[j] == rhs)) return false;
  }
  return true;
}

}  // namespace qalex
