#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qalex/burau.hpp"
#include "qalex/corpus.hpp"
#include "qalex/errors.hpp"

using namespace qalex;

namespace {

const LaurentPoly t = LaurentPoly::t();
const LaurentPoly one(1);

std::vector<BraidWord> mixed_corpus() {
  auto words = all_words(3, 4);
  const auto random = random_corpus({31, 150, 2, 5, 12, false});
  words.insert(words.end(), random.begin(), random.end());
  return words;
}

}  // namespace

TEST(Psi, GeneratorImage) {
  LaurentMatrix u = laurent_matrix(2, 2);
  u(0, 0) = one - t;
  u(0, 1) = t;
  u(1, 0) = one;
  EXPECT_EQ(psi_unreduced(BraidWord(2, {1})), u);
  EXPECT_EQ(psi_unreduced(BraidWord(3, {})), laurent_identity(3));
  EXPECT_EQ(psi_unreduced(BraidWord(2, {1, -1})), laurent_identity(2));
}

TEST(Psi, MatchesExplicitGeneratorProduct) {
  for (const auto& b : mixed_corpus())
    EXPECT_EQ(psi_unreduced(b), oracle::explicit_psi(b.letters(), b.strands())) << b.to_string();
}

TEST(Psi, BraidRelations) {
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (j == i + 1) {
          EXPECT_EQ(psi_unreduced(BraidWord(n, {i, j, i})), psi_unreduced(BraidWord(n, {j, i, j})));
        } else if (std::abs(i - j) >= 2) {
          EXPECT_EQ(psi_unreduced(BraidWord(n, {i, j})), psi_unreduced(BraidWord(n, {j, i})));
        }
      }
}

TEST(Psi, AtTEqualsOneIsPermutationMatrix) {
  for (const auto& b : mixed_corpus()) {
    const LaurentMatrix m = psi_unreduced(b);
    const Permutation p = closure_permutation(b);
    // A row vector e_i is carried to e_{p(i)}.
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        EXPECT_EQ(m(i, j).evaluate(1), Rational(p[i] == static_cast<int>(j) ? 1 : 0)) << b.to_string();
  }
}

TEST(Psi, DeterminantIsMinusTToTheWrithe) {
  for (const auto& b : mixed_corpus()) {
    const int g = exponent_sum(b);
    const LaurentPoly expected = LaurentPoly::monomial(g, (g % 2 == 0) ? 1 : -1);
    EXPECT_EQ(laurent_det(psi_unreduced(b)), expected) << b.to_string();
  }
}

TEST(CMatrix, ExamplesAndInverse) {
  LaurentMatrix c2 = laurent_matrix(2, 2);
  c2(0, 0) = one;
  c2(0, 1) = one;
  c2(1, 1) = one;
  EXPECT_EQ(c_matrix(2), c2);
  c2(0, 1) = LaurentPoly(-1);
  EXPECT_EQ(c_matrix_inverse(2), c2);
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(c_matrix(k) * c_matrix_inverse(k), laurent_identity(static_cast<std::size_t>(k)));
    EXPECT_EQ(c_matrix_inverse(k) * c_matrix(k), laurent_identity(static_cast<std::size_t>(k)));
  }
  EXPECT_THROW(c_matrix(0), PreconditionError);
}

TEST(ReducedBurau, Examples) {
  // C_2^{-1} U C_2 = [[-t, 0], [1, 1]] by hand.
  const ReducedBurau r = reduced_burau(BraidWord(2, {1}));
  ASSERT_EQ(r.matrix.rows(), 1u);
  EXPECT_EQ(r.matrix(0, 0), -t);
  EXPECT_EQ(r.star_row, std::vector<LaurentPoly>{one});

  const ReducedBurau e = reduced_burau(BraidWord(3, {}));
  EXPECT_EQ(e.matrix, laurent_identity(2));
  EXPECT_EQ(e.star_row, (std::vector<LaurentPoly>{LaurentPoly(), LaurentPoly()}));

  EXPECT_THROW(reduced_burau(BraidWord(1, {})), PreconditionError);
}

TEST(ReducedBurau, IsHomomorphism) {
  const auto words = random_corpus({13, 120, 2, 5, 8, false});
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    const auto& a = words[i];
    const auto& b = words[i + 1];
    if (a.strands() != b.strands()) continue;
    EXPECT_EQ(reduced_burau(concat(a, b)).matrix, reduced_burau(a).matrix * reduced_burau(b).matrix);
  }
}

TEST(BlockDecompose, Examples) {
  const BurauBlocks s = block_decompose(BraidWord(2, {1}));
  EXPECT_EQ(s.hat(0, 0), one - t);
  EXPECT_EQ(s.b_col, std::vector<LaurentPoly>{t});
  EXPECT_EQ(s.c_row, std::vector<LaurentPoly>{one});
  EXPECT_TRUE(s.d.is_zero());

  const BurauBlocks e = block_decompose(BraidWord(3, {}));
  EXPECT_EQ(e.hat, laurent_identity(2));
  EXPECT_TRUE(e.b_col[0].is_zero() && e.b_col[1].is_zero());
  EXPECT_EQ(e.d, one);

  // Top-left entry of U^3 from repeated explicit 2x2 products.
  const auto u3 = oracle::explicit_psi({1, 1, 1}, 2);
  const BurauBlocks tre = block_decompose(BraidWord(2, {1, 1, 1}));
  EXPECT_EQ(tre.hat(0, 0), u3(0, 0));
  EXPECT_EQ(tre.hat(0, 0), (one - t) * (one + t * t));
}

TEST(BlockDecompose, ReassemblesToPsi) {
  for (const auto& b : mixed_corpus()) {
    if (b.strands() < 2) continue;
    EXPECT_EQ(assemble(block_decompose(b)), psi_unreduced(b));
  }
}

TEST(RowRelation, Examples) {
  EXPECT_TRUE(row_relation_check(BraidWord(2, {1})));
  EXPECT_TRUE(row_relation_check(BraidWord(2, {})));
  EXPECT_TRUE(row_relation_check(BraidWord(4, {})));
}

TEST(RowRelation, HoldsOnMixedCorpus) {
  for (const auto& b : mixed_corpus()) {
    if (b.strands() < 2) continue;
    EXPECT_TRUE(row_relation_check(b)) << b.to_string();
  }
}
