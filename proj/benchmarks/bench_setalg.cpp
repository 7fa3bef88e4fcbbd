#include <benchmark/benchmark.h>

#include <vector>

#include "betaz/random.hpp"
#include "betaz/setalg.hpp"

namespace {

std::vector<betaz::DefinableSet> sample_sets(std::size_t count) {
  betaz::Rng rng(11);
  std::vector<betaz::DefinableSet> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(betaz::random_set(rng));
  return out;
}

void BM_Intersection(benchmark::State& state) {
  const auto sets = sample_sets(64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sets[i % 64] & sets[(i + 1) % 64]);
    ++i;
  }
}
BENCHMARK(BM_Intersection);

void BM_Complement(benchmark::State& state) {
  const auto sets = sample_sets(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(~sets[i++ % 64]);
}
BENCHMARK(BM_Complement);

void BM_SubsetTest(benchmark::State& state) {
  const auto sets = sample_sets(64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sets[i % 64].subset_of(sets[(i + 7) % 64]));
    ++i;
  }
}
BENCHMARK(BM_SubsetTest);

void BM_ResidueLattice(benchmark::State& state) {
  const auto m = state.range(0);
  for (auto _ : state) {
    auto acc = betaz::DefinableSet::empty();
    for (std::int64_t r = 0; r < m; r += 2) acc = acc | betaz::DefinableSet::residue_class(m, r);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ResidueLattice)->Arg(6)->Arg(60)->Arg(420);

}  // namespace

BENCHMARK_MAIN();
