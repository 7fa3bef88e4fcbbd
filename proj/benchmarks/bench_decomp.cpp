#include <benchmark/benchmark.h>

#include <vector>

#include "betaz/decomp.hpp"
#include "betaz/random.hpp"

namespace {

void BM_DyadicDecompose(benchmark::State& state) {
  betaz::Rng rng(14);
  std::vector<betaz::SymbolicSequence> phis;
  for (int i = 0; i < 16; ++i) phis.push_back(betaz::random_unit_range(rng));
  const auto depth = static_cast<unsigned>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(betaz::dyadic_decompose(phis[i++ % 16], depth));
}
BENCHMARK(BM_DyadicDecompose)->Arg(1)->Arg(4)->Arg(12);

void BM_LevelDecompose(benchmark::State& state) {
  betaz::Rng rng(15);
  std::vector<betaz::SymbolicSequence> phis;
  for (int i = 0; i < 16; ++i) phis.push_back(betaz::random_step_sequence(rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(betaz::level_decompose(phis[i++ % 16]));
}
BENCHMARK(BM_LevelDecompose)->Arg(2)->Arg(5)->Arg(8);

void BM_RecomposeDyadic(benchmark::State& state) {
  betaz::Rng rng(16);
  const auto e = betaz::dyadic_decompose(betaz::random_unit_range(rng), 12);
  for (auto _ : state) benchmark::DoNotOptimize(betaz::recompose(e));
}
BENCHMARK(BM_RecomposeDyadic);

}  // namespace

BENCHMARK_MAIN();
