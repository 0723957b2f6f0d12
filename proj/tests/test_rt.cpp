#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "qalex/alexander.hpp"
#include "qalex/burau.hpp"
#include "qalex/corpus.hpp"
#include "qalex/errors.hpp"
#include "qalex/gaussian.hpp"

using namespace qalex;

namespace {

constexpr int N = kDefaultOrder;

TruncSeries series(std::vector<long> c, int order) {
  std::vector<Rational> q;
  for (long x : c) q.emplace_back(x);
  return TruncSeries(order, std::move(q));
}

SeriesMatrix zeros(std::size_t n, int order = N) { return SeriesMatrix(n, n, TruncSeries(order)); }

GaussianState random_state(CorpusRng& rng, std::size_t slots) {
  SeriesMatrix m = zeros(slots);
  for (std::size_t i = 0; i < slots; ++i)
    for (std::size_t j = 0; j < slots; ++j) m(i, j) = oracle::random_series(rng, N, 1);
  return make_state(std::move(m), TruncSeries::one(N));
}

}  // namespace

TEST(CrossingKernel, PositiveAndNegative) {
  const SeriesMatrix u = crossing_kernel(1, 4);
  EXPECT_EQ(u(0, 0), series({0, 1, -1, 1, -1}, 4));
  EXPECT_EQ(u(0, 1), series({1, -1, 1, -1, 1}, 4));
  EXPECT_EQ(u(1, 0), TruncSeries::one(4));
  EXPECT_TRUE(u(1, 1).is_zero());

  const SeriesMatrix v = crossing_kernel(-1, 4);
  EXPECT_TRUE(v(0, 0).is_zero());
  EXPECT_EQ(v(0, 1), TruncSeries::one(4));
  EXPECT_EQ(v(1, 0), series({1, 1}, 4));
  EXPECT_EQ(v(1, 1), series({0, -1}, 4));
  EXPECT_THROW(crossing_kernel(0, 4), PreconditionError);
}

TEST(CrossingKernel, InversePairAtEveryOrder) {
  for (int order = 0; order <= 10; ++order)
    EXPECT_EQ(crossing_kernel(1, order) * crossing_kernel(-1, order), SeriesMatrix::identity(2, TruncSeries(order)));
}

TEST(GaussianContract, ScalarProductKernel) {
  // exp(conj(w) z + conj(z) u) with z integrated out leaves exp(conj(w) u).
  SeriesMatrix m = zeros(2);
  m(0, 1) = TruncSeries::one(N);
  m(1, 0) = TruncSeries::one(N);
  const GaussianState out = gaussian_contract(make_state(m, TruncSeries::one(N)), 1);
  EXPECT_EQ(out.prefactor, TruncSeries::one(N));
  EXPECT_EQ(out.form(0, 0), TruncSeries::one(N));
  EXPECT_EQ(out.open_slots, std::vector<int>{0});
}

TEST(GaussianContract, PositiveCupCap) {
  const GaussianState out = gaussian_contract(make_state(crossing_kernel(1, N), TruncSeries::one(N)), 1);
  EXPECT_EQ(out.prefactor, TruncSeries::one(N));
  EXPECT_EQ(out.form(0, 0), TruncSeries::one(N));
}

TEST(GaussianContract, NegativeCupCapGivesT) {
  const GaussianState out = gaussian_contract(make_state(crossing_kernel(-1, N), TruncSeries::one(N)), 1);
  EXPECT_EQ(out.prefactor, t_to_hbar(LaurentPoly::t(), N));
  EXPECT_EQ(out.form(0, 0), TruncSeries::one(N));
}

TEST(GaussianContract, Errors) {
  SeriesMatrix m = zeros(2);
  m(1, 1) = TruncSeries::one(N);
  const GaussianState s = make_state(m, TruncSeries::one(N));
  EXPECT_THROW(gaussian_contract(s, 1), SingularContractionError);
  EXPECT_THROW(gaussian_contract(s, 7), PreconditionError);
  GaussianState bad = s;
  bad.open_slots.pop_back();
  EXPECT_THROW(gaussian_contract(bad, 0), DimensionError);
}

TEST(GaussianContract, OrderIndependence) {
  CorpusRng rng(606);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 3 : 4;
    const GaussianState s = random_state(rng, n);
    std::vector<int> order(n - 1);
    std::iota(order.begin(), order.end(), 0);
    const GaussianState reference = gaussian_contract_all(s, order);
    while (std::next_permutation(order.begin(), order.end())) {
      const GaussianState other = gaussian_contract_all(s, order);
      EXPECT_EQ(other.prefactor, reference.prefactor);
      EXPECT_EQ(other.form, reference.form);
    }
    // Full closure is order independent as well.
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    const TruncSeries closed = gaussian_contract_all(s, all).prefactor;
    std::reverse(all.begin(), all.end());
    EXPECT_EQ(gaussian_contract_all(s, all).prefactor, closed);
  }
}

TEST(GaussianContract, FullClosureIsInverseDeterminant) {
  CorpusRng rng(707);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(1 + trial % 4);
    const GaussianState s = random_state(rng, n);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    const SeriesMatrix w = SeriesMatrix::identity(n, TruncSeries(N)) - s.form;
    EXPECT_EQ(gaussian_contract_all(s, all).prefactor, series_inverse(oracle::cofactor_det(w)));
  }
}

TEST(BurauKernel, IsSeriesImageOfLaurentBurau) {
  const auto words = random_corpus({808, 60, 2, 5, 12, false});
  for (const auto& b : words) EXPECT_EQ(burau_kernel(b, N), t_to_hbar(psi_unreduced(b), N)) << b.to_string();
}

TEST(LongKnot, Examples) {
  const GaussianState unknot = evaluate_long_knot(BraidWord(2, {1}), N);
  EXPECT_EQ(unknot.prefactor, series({1, 1}, N));
  EXPECT_EQ(unknot.form(0, 0), TruncSeries::one(N));
  EXPECT_EQ(unknot.open_slots, std::vector<int>{1});

  const GaussianState trivial = evaluate_long_knot(BraidWord(1, {}), N);
  EXPECT_EQ(trivial.prefactor, TruncSeries::one(N));
  EXPECT_EQ(trivial.form(0, 0), TruncSeries::one(N));

  const LaurentPoly t = LaurentPoly::t();
  const GaussianState trefoil = evaluate_long_knot(BraidWord(2, {1, 1, 1}), N);
  EXPECT_EQ(trefoil.prefactor, series_inverse(t_to_hbar(t - t * t + t.pow(3), N)));
  EXPECT_EQ(trefoil.form(0, 0), TruncSeries::one(N));

  EXPECT_THROW(evaluate_long_knot(BraidWord(2, {}), N), PreconditionError);
}

TEST(Schur, Examples) {
  EXPECT_TRUE(schur_identity_check(BraidWord(2, {1})));
  EXPECT_TRUE(schur_identity_check(BraidWord(2, {})));
  EXPECT_THROW(schur_identity_check(BraidWord(1, {})), PreconditionError);
}

TEST(Schur, HoldsOnKnotCorpus) {
  auto words = exhaustive_knot_corpus(5);
  const auto random = random_corpus({909, 100, 2, 5, 12, true});
  words.insert(words.end(), random.begin(), random.end());
  for (const auto& b : words) {
    if (b.strands() < 2) continue;
    EXPECT_TRUE(schur_identity_check(b)) << b.to_string();
    EXPECT_EQ(evaluate_long_knot(b, N).form(0, 0), TruncSeries::one(N)) << b.to_string();
  }
}

TEST(Writhe, Examples) {
  EXPECT_EQ(writhe_correction(BraidWord(2, {1}), 4), series({1, -1, 1, -1, 1}, 4));
  EXPECT_EQ(writhe_correction(BraidWord(2, {1, 1, 1}), 4), t_to_hbar(LaurentPoly::monomial(2), 4));
  EXPECT_EQ(writhe_correction(BraidWord(2, {-1}), 4), TruncSeries::one(4));
  EXPECT_THROW(writhe_correction(BraidWord(2, {1, 1}), 4), ConsistencyError);
}

TEST(UniversalInvariant, Examples) {
  EXPECT_EQ(universal_invariant(BraidWord(2, {1}), N).series, TruncSeries::one(N));
  EXPECT_EQ(universal_invariant(BraidWord(2, {1, 1, 1}), 4).series, series({1, 0, -1, 1, 0}, 4));
  // Delta_fig8(1 + h) = -(1 + h) + 3 - (1 + h)^{-1} = 1 - h^2 + O(h^3), so the
  // reciprocal's h^2 coefficient is +1.
  const TruncSeries fig8 = universal_invariant(BraidWord(3, {1, -2, 1, -2}), 2).series;
  EXPECT_EQ(fig8, series({1, 0, 1}, 2));
  EXPECT_THROW(universal_invariant(BraidWord(3, {1}), N), PreconditionError);
}

TEST(InverseAlexander, KnownKnotsAndRandomCorpus) {
  for (const BraidWord& b : {BraidWord(2, {1}), BraidWord(2, {1, 1, 1}), BraidWord(3, {1, -2, 1, -2}),
                             BraidWord(3, {1, 2, 1, 2}), BraidWord(2, {1, 1, 1, 1, 1}), BraidWord(1, {})})
    EXPECT_TRUE(theorem1_check(b, N)) << b.to_string();
  for (const auto& b : random_corpus({1001, 80, 2, 5, 12, true})) {
    EXPECT_TRUE(theorem1_check(b, N)) << b.to_string();
    EXPECT_EQ(universal_invariant(b, N).series[0], Rational(1));
  }
}

TEST(InverseAlexander, InvariantUnderMarkovMoves) {
  for (const auto& b : random_corpus({1002, 40, 2, 4, 10, true})) {
    const TruncSeries z = universal_invariant(b, N).series;
    EXPECT_EQ(universal_invariant(stabilize(b, 1), N).series, z);
    EXPECT_EQ(universal_invariant(stabilize(b, -1), N).series, z);
    if (b.strands() >= 2) EXPECT_EQ(universal_invariant(conjugate(b, BraidWord(b.strands(), {1})), N).series, z);
  }
}
