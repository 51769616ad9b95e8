#include <benchmark/benchmark.h>

#include "qarith/algorithms.hpp"
#include "qarith/arithmetic.hpp"

namespace {

using namespace qarith;

void BM_SuccessorSweep(benchmark::State& state) {
  const std::uint32_t L = static_cast<std::uint32_t>(state.range(0));
  RegisterShape shape(2, L, 1);
  auto succ = successor_implicit(shape, 1);
  for (auto _ : state) {
    Index acc = 0;
    for (Index b = 0; b < shape.dimension(); ++b)
      acc ^= succ.apply_index(b);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * shape.dimension());
}
BENCHMARK(BM_SuccessorSweep)->Arg(8)->Arg(12)->Arg(16);

void BM_PlusExhaustive(benchmark::State& state) {
  const std::uint32_t L = static_cast<std::uint32_t>(state.range(0));
  RegisterShape two(2, L, 2);
  auto plus = plus_op(two);
  for (auto _ : state) {
    Index acc = 0;
    for (Index idx = 0; idx < two.dimension(); ++idx)
      acc ^= plus.apply_index(idx);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * two.dimension());
}
BENCHMARK(BM_PlusExhaustive)->Arg(3)->Arg(5)->Arg(7);

void BM_TimesExhaustive(benchmark::State& state) {
  const std::uint32_t L = static_cast<std::uint32_t>(state.range(0));
  RegisterShape four(2, L, 4);
  auto times = times_op(four);
  const Index K = four.register_dimension();
  for (auto _ : state) {
    Index acc = 0;
    for (Index s = 0; s < K; ++s)
      for (Index w = 0; w < K; ++w)
        acc ^= times.apply_index(s + w * K);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * K * K);
}
BENCHMARK(BM_TimesExhaustive)->Arg(2)->Arg(3)->Arg(4);

void BM_GroverIteration(benchmark::State& state) {
  const std::uint32_t L = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto run = grover_iterate(L, 1, 4);
    benchmark::DoNotOptimize(run.success_probability.back());
  }
}
BENCHMARK(BM_GroverIteration)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
