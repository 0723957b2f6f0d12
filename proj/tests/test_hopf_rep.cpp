#include <gtest/gtest.h>

#include <stdexcept>

#include "qalex/hopf_rep.hpp"

using namespace qalex;

namespace {

constexpr int N = 8;

PolyFn z(int k) { return PolyFn::monomial(1, N, k); }
PolyFn z(const TruncSeries& c, int k) { return PolyFn::monomial(1, c, k); }

TruncSeries hbar_times(const Rational& c) {
  return TruncSeries::hbar(N) * TruncSeries(N, {c});
}

}  // namespace

TEST(Generators, Examples) {
  const Rational zero(0);
  EXPECT_EQ(rep_generator("b", zero, N).apply(z(3)), z(TruncSeries(N, {Rational(3)}), 2));
  EXPECT_EQ(rep_generator("phi", zero, N).apply(z(1)), z(TruncSeries::hbar(N), 2));
  for (int k = 0; k <= 6; ++k)
    EXPECT_EQ(rep_generator("psi", zero, N).apply(z(k)), z(TruncSeries(N, {Rational(-k)}), k));
  EXPECT_EQ(rep_generator("a", zero, N).apply(z(4)), z(TruncSeries::one(N) + TruncSeries::hbar(N), 4));
  EXPECT_TRUE(rep_generator("b", zero, N).apply(z(0)).is_zero());
}

TEST(Generators, UnknownName) {
  EXPECT_THROW(rep_generator("c", Rational(0), N), std::invalid_argument);
  EXPECT_THROW(rep_generator("", Rational(0), N), std::invalid_argument);
}

TEST(Commutators, Examples) {
  const Rational lambda(0);
  const RepOperator a = rep_generator("a", lambda, N);
  const RepOperator b = rep_generator("b", lambda, N);
  const RepOperator phi = rep_generator("phi", lambda, N);
  const RepOperator psi = rep_generator("psi", lambda, N);
  EXPECT_EQ((phi * b - b * phi).apply(z(2)), z(-TruncSeries::hbar(N), 2));
  EXPECT_EQ((psi * b - b * psi).apply(z(3)), b.apply(z(3)));
  for (int k = 0; k <= 5; ++k) EXPECT_EQ((phi * psi - psi * phi).apply(z(k)), z(TruncSeries::hbar(N), k + 1));
  EXPECT_EQ((phi * b - b * phi).apply(z(5)), (RepOperator::scalar(TruncSeries::one(N)) - a).apply(z(5)));
}

TEST(Commutators, LambdaGrid) {
  for (const Rational& lambda : {Rational(0), Rational(1), Rational(-1), Rational(5, 2)}) {
    const CommutatorReport report = commutator_check(lambda, N, 12);
    EXPECT_TRUE(report.ok()) << report.violations.front();
    EXPECT_EQ(report.checked, 3 * 13);
  }
}

TEST(CentralElement, Examples) {
  const Rational lambda(5, 2);
  const RepOperator a = rep_generator("a", lambda, N);
  const RepOperator b = rep_generator("b", lambda, N);
  const RepOperator phi = rep_generator("phi", lambda, N);
  const RepOperator psi = rep_generator("psi", lambda, N);
  const RepOperator c = phi * b + (a - RepOperator::scalar(TruncSeries::one(N))) * psi;
  EXPECT_EQ(c.apply(z(7)), z(hbar_times(lambda), 7));
  for (int k = 0; k <= 12; ++k) {
    const RepOperator c0 = rep_generator("phi", 0, N) * rep_generator("b", 0, N) +
                           (rep_generator("a", 0, N) - RepOperator::scalar(TruncSeries::one(N))) *
                               rep_generator("psi", 0, N);
    EXPECT_TRUE(c0.apply(z(k)).is_zero());
  }
  for (const Rational& l : {Rational(0), Rational(1), Rational(-1), Rational(5, 2)})
    EXPECT_TRUE(central_element_check(l, N, 12));
}

TEST(RMatrix, ConstantIsFixed) {
  const PolyFn one = PolyFn::monomial(2, N, 0, 0);
  EXPECT_EQ(r_action_double_sum(one), one);
  EXPECT_EQ(r_action_graded(one), one);
  EXPECT_EQ(r_action_substitution(one), one);
}

TEST(RMatrix, SubstitutionByHand) {
  // U^T z = ((1 - t) z0 + z1, t z0), so z0 -> (1 - t) z0 + z1 and z1 -> t z0.
  const TruncSeries t = series_inverse(TruncSeries::one(N) + TruncSeries::hbar(N));
  const PolyFn z0 = PolyFn::monomial(2, N, 1, 0);
  const PolyFn z1 = PolyFn::monomial(2, N, 0, 1);
  EXPECT_EQ(r_action_substitution(z0), (TruncSeries::one(N) - t) * z0 + z1);
  EXPECT_EQ(r_action_substitution(z1), t * z0);
}

TEST(RMatrix, ThreeRoutesAgree) {
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; p + q <= 6; ++q) EXPECT_TRUE(r_matrix_action_check(p, q, N)) << p << "," << q;
}

TEST(RMatrix, RoutesAreLinear) {
  const PolyFn f = PolyFn::monomial(2, N, 2, 1) + TruncSeries::hbar(N) * PolyFn::monomial(2, N, 0, 3);
  const PolyFn g = PolyFn::monomial(2, N, 1, 1);
  EXPECT_EQ(r_action_graded(f + g), r_action_graded(f) + r_action_graded(g));
  EXPECT_EQ(r_action_double_sum(f + g), r_action_substitution(f) + r_action_substitution(g));
}
