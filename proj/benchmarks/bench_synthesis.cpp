// Microbenchmarks for the three synthesis algorithms at n = 8.

#include <benchmark/benchmark.h>

#include "tdsynth/global.hpp"
#include "tdsynth/householder.hpp"
#include "tdsynth/local.hpp"

using namespace tdsynth;

namespace {

ScaledDyadicMatrix instance(int n, unsigned k, Ring ring, uint64_t seed) {
  return random_matrix_with_lde(n, k, ring, seed).second;
}

void BM_LocalSynthesis(benchmark::State& state) {
  const unsigned k = unsigned(state.range(0));
  const ScaledDyadicMatrix u = instance(8, k, Ring::Scaled, 17);
  size_t length = 0;
  for (auto _ : state) {
    GeneratorWord w = synthesize_local(u, Ring::Scaled);
    length = w.length();
    benchmark::DoNotOptimize(w);
  }
  state.counters["word_length"] = double(length);
}

void BM_HouseholderSynthesis(benchmark::State& state) {
  const unsigned k = unsigned(state.range(0)) & ~1u;  // even exponent only
  const ScaledDyadicMatrix u = instance(8, k, Ring::Integral, 17);
  size_t length = 0;
  for (auto _ : state) {
    auto [w, wrapper] = synthesize_householder(u, Ring::Integral);
    length = w.length();
    benchmark::DoNotOptimize(w);
  }
  state.counters["word_length"] = double(length);
}

void BM_GlobalSynthesis(benchmark::State& state) {
  const unsigned k = unsigned(state.range(0));
  const ScaledDyadicMatrix u = instance(8, k, Ring::Scaled, 17);
  size_t length = 0;
  for (auto _ : state) {
    GeneratorWord w = synthesize_global(u);
    length = w.length();
    benchmark::DoNotOptimize(w);
  }
  state.counters["word_length"] = double(length);
}

void BM_IhElimination(benchmark::State& state) {
  const unsigned k = unsigned(state.range(0)) & ~1u;
  const ScaledDyadicMatrix u = instance(8, k, Ring::Integral, 17);
  const GeneratorWord w = synthesize_global(u);
  for (auto _ : state) {
    GeneratorWord reduced = eliminate_ih_pairs(w);
    benchmark::DoNotOptimize(reduced);
  }
}

}  // namespace

BENCHMARK(BM_LocalSynthesis)->Arg(4)->Arg(10)->Arg(20);
BENCHMARK(BM_HouseholderSynthesis)->Arg(4)->Arg(10)->Arg(20);
BENCHMARK(BM_GlobalSynthesis)->Arg(4)->Arg(10)->Arg(20);
BENCHMARK(BM_IhElimination)->Arg(4)->Arg(10);

BENCHMARK_MAIN();
