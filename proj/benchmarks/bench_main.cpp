#include <benchmark/benchmark.h>

#include <random>

#include "fivedual/assembly.hpp"
#include "fivedual/lens.hpp"

using namespace fivedual;

static IntegerMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(-20, 20);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

static void BM_InvariantFactors(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors(m));
}
BENCHMARK(BM_InvariantFactors)->Arg(16)->Arg(32)->Arg(64);

static void BM_GroupRingMultiply(benchmark::State& state) {
  const auto g = cyclic_group(static_cast<std::size_t>(state.range(0)));
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> dist(-5, 5);
  GroupRingElement a(g), b(g);
  for (std::size_t i = 0; i < g->order(); ++i) {
    a[i] = dist(rng);
    b[i] = dist(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(gr_mul(a, b));
}
BENCHMARK(BM_GroupRingMultiply)->Arg(5)->Arg(25)->Arg(100);

static void BM_LensHomology(benchmark::State& state) {
  const auto a = lens_complex(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (std::size_t d = 0; d <= 5; ++d) benchmark::DoNotOptimize(homology(a, d, Coefficients::kIntegral));
}
BENCHMARK(BM_LensHomology)->Arg(5)->Arg(25)->Arg(50);

static void BM_Stage6(benchmark::State& state) {
  const auto a = lens_complex(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(to_dual_form_stage6(a));
}
BENCHMARK(BM_Stage6)->Arg(3)->Arg(5);

static void BM_AssembleDualForm(benchmark::State& state) {
  const auto a = lens_complex(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(to_dual_form(a));
}
BENCHMARK(BM_AssembleDualForm)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_LensAsdTransform(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lens_asd_transform(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_LensAsdTransform)->Arg(5)->Arg(25);
BENCHMARK_MAIN();
