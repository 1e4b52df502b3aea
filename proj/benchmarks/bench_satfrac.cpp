#include <benchmark/benchmark.h>

#include "satfrac/cycles.hpp"
#include "satfrac/linalg.hpp"
#include "satfrac/markov.hpp"
#include "satfrac/saturation.hpp"

namespace {

using namespace satfrac;

Fraction staircase(int n) {
  std::vector<Point> pts;
  for (int i = 1; i <= n; ++i) {
    pts.push_back({i, i});
    if (i < n) pts.push_back({i, i + 1});
  }
  return {DesignSize(n, n), pts};
}

void BM_Determinant(benchmark::State& state) {
  const Fraction f = staircase(static_cast<int>(state.range(0)));
  const ModelMatrix x = build_full_model_matrix(f.size());
  const IntMatrix xf = restrict(x, f).values;
  for (auto _ : state) benchmark::DoNotOptimize(integer_determinant(xf));
}
BENCHMARK(BM_Determinant)->RangeMultiplier(2)->Range(4, 32);

void BM_IsSaturated(benchmark::State& state) {
  const Fraction f = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_saturated(f));
}
BENCHMARK(BM_IsSaturated)->RangeMultiplier(2)->Range(4, 64);

void BM_FindCycle(benchmark::State& state) {
  const Fraction f = Fraction::full(DesignSize(static_cast<int>(state.range(0)), static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(find_cycle(f));
}
BENCHMARK(BM_FindCycle)->Arg(4)->Arg(8)->Arg(16);

void BM_EnumerateSaturated(benchmark::State& state) {
  const DesignSize s(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::size_t n = 0;
  for (auto _ : state) {
    n = 0;
    for_each_saturated(s, [&](const Fraction&) { return ++n, true; });
  }
  state.counters["fractions"] = static_cast<double>(n);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_EnumerateSaturated)->Args({4, 4})->Args({4, 5})->Unit(benchmark::kMillisecond);

void BM_SampleUniform(benchmark::State& state) {
  const DesignSize s(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_uniform_saturated(s, rng));
}
BENCHMARK(BM_SampleUniform)->Arg(4)->Arg(16)->Arg(64);

void BM_RandomWalk(benchmark::State& state) {
  const DesignSize s(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  const BinaryTable start = to_table(sample_uniform_saturated(s, 3));
  const auto basis = markov_basis(s, 3);
  for (auto _ : state) benchmark::DoNotOptimize(random_walk(start, basis, 1000, 7));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_RandomWalk)->Arg(4)->Arg(6);

void BM_MarkovBasis(benchmark::State& state) {
  const DesignSize s(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(markov_basis(s));
}
BENCHMARK(BM_MarkovBasis)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
