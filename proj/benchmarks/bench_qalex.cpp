#include <benchmark/benchmark.h>

#include "qalex/alexander.hpp"
#include "qalex/burau.hpp"
#include "qalex/corpus.hpp"
#include "qalex/gaussian.hpp"
#include "qalex/linalg.hpp"

using namespace qalex;

namespace {

// Torus knot T(2, 2k+1) on n strands, stabilized up to the requested size.
BraidWord test_knot(int strands) {
  BraidWord b(2, {1, 1, 1, 1, 1});
  while (b.strands() < strands) b = stabilize(b, b.strands() % 2 == 0 ? 1 : -1);
  return conjugate(b, full_twist(strands, strands));
}

void BM_LaurentDet(benchmark::State& state) {
  const BurauBlocks blocks = block_decompose(test_knot(static_cast<int>(state.range(0))));
  const LaurentMatrix w = laurent_identity(blocks.hat.rows()) - blocks.hat;
  for (auto _ : state) benchmark::DoNotOptimize(laurent_det(w));
}
BENCHMARK(BM_LaurentDet)->DenseRange(3, 8);

void BM_AlexanderThm2(benchmark::State& state) {
  const BraidWord b = test_knot(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alexander_thm2(b));
}
BENCHMARK(BM_AlexanderThm2)->DenseRange(2, 8);

void BM_AlexanderReduced(benchmark::State& state) {
  const BraidWord b = test_knot(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alexander_reduced(b));
}
BENCHMARK(BM_AlexanderReduced)->DenseRange(2, 8);

void BM_UniversalInvariant(benchmark::State& state) {
  const BraidWord b(3, {1, -2, 1, -2});
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(universal_invariant(b, order));
}
BENCHMARK(BM_UniversalInvariant)->Arg(4)->Arg(8)->Arg(16);

void BM_CableAlexander(benchmark::State& state) {
  const BraidWord b(3, {1, -2, 1, -2});
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alexander_thm2(cable(b, m)));
}
BENCHMARK(BM_CableAlexander)->Arg(2)->Arg(3);

void BM_RandomCorpusInverseCheck(benchmark::State& state) {
  const auto words = random_corpus({1, 20, 2, 5, 12, true});
  for (auto _ : state)
    for (const auto& b : words) benchmark::DoNotOptimize(theorem1_check(b, 8));
}
BENCHMARK(BM_RandomCorpusInverseCheck)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
