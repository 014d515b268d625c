// Serial vs OpenMP Boolean kernels. The bitwise reference is included at small
// sizes only; it is O(n^3) bit operations.

#include <benchmark/benchmark.h>

#include <random>

#include "compidx/kernels.hpp"
#include "compidx/simple_graph.hpp"

namespace {

using namespace compidx;

BooleanMatrix random_matrix(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  BooleanMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng)) a.set(i, j);
  return a;
}

template <BooleanMatrix (*Multiply)(const BooleanMatrix&, const BooleanMatrix&)>
void BM_multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 0.1, 1), b = random_matrix(n, 0.1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Multiply(a, b));
  state.SetComplexityN(state.range(0));
}

template <SimpleGraph (*RowGraph)(const BooleanMatrix&)>
void BM_row_graph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 0.05, 3);
  for (auto _ : state) benchmark::DoNotOptimize(RowGraph(a));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_multiply<kernels::multiply_reference>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_multiply<kernels::multiply_serial>)->RangeMultiplier(2)->Range(32, 2048);
BENCHMARK(BM_multiply<kernels::multiply_omp>)->RangeMultiplier(2)->Range(32, 2048);
BENCHMARK(BM_row_graph<kernels::row_graph_reference>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_row_graph<kernels::row_graph_serial>)->RangeMultiplier(2)->Range(32, 2048);
BENCHMARK(BM_row_graph<kernels::row_graph_omp>)->RangeMultiplier(2)->Range(32, 2048);

BENCHMARK_MAIN();
