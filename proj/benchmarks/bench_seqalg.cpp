#include <benchmark/benchmark.h>

#include <vector>

#include "betaz/random.hpp"
#include "betaz/seqalg.hpp"

namespace {

std::vector<betaz::SymbolicSequence> sample_sequences(std::size_t count) {
  betaz::Rng rng(12);
  std::vector<betaz::SymbolicSequence> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(betaz::random_bounded(rng));
  return out;
}

void BM_Product(benchmark::State& state) {
  const auto seqs = sample_sequences(32);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(seqs[i % 32] * seqs[(i + 1) % 32]);
    ++i;
  }
}
BENCHMARK(BM_Product);

void BM_Sum(benchmark::State& state) {
  const auto seqs = sample_sequences(32);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(seqs[i % 32] + seqs[(i + 1) % 32]);
    ++i;
  }
}
BENCHMARK(BM_Sum);

void BM_ExactEval(benchmark::State& state) {
  const auto seqs = sample_sequences(32);
  std::int64_t n = -500;
  for (auto _ : state) {
    benchmark::DoNotOptimize(betaz::eval(seqs[static_cast<std::size_t>(n + 500) % 32], n));
    n = n == 500 ? -500 : n + 1;
  }
}
BENCHMARK(BM_ExactEval);

void BM_NumericEval(benchmark::State& state) {
  const auto seqs = sample_sequences(32);
  std::int64_t n = -500;
  for (auto _ : state) {
    benchmark::DoNotOptimize(betaz::eval_numeric(seqs[static_cast<std::size_t>(n + 500) % 32], n));
    n = n == 500 ? -500 : n + 1;
  }
}
BENCHMARK(BM_NumericEval);

void BM_AtLeastSet(benchmark::State& state) {
  betaz::Rng rng(13);
  const auto phi = betaz::random_unit_range(rng);
  for (auto _ : state) benchmark::DoNotOptimize(betaz::at_least_set(phi, betaz::Rational(1, 2)));
}
BENCHMARK(BM_AtLeastSet);

}  // namespace

BENCHMARK_MAIN();
