#include <benchmark/benchmark.h>

#include <cmath>

#include "abeldense/construct.hpp"
#include "abeldense/density.hpp"
#include "abeldense/diophantine.hpp"
#include "abeldense/orbit.hpp"

using namespace abeldense;

static void BM_CheckDenseRn(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GeneratorSet a = make_dense_rn_generators(n);
  for (auto _ : state) benchmark::DoNotOptimize(check_dense_rn(a, n));
}
BENCHMARK(BM_CheckDenseRn)->DenseRange(1, 6);

static void BM_Lll(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntegerMatrix b(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = 1;
    b(i, n) = static_cast<long>(std::floor(std::sqrt(static_cast<double>(i + 2)) * 1e9));
  }
  for (auto _ : state) benchmark::DoNotOptimize(lll_reduce(b));
}
BENCHMARK(BM_Lll)->DenseRange(2, 6);

static void BM_Kronecker(benchmark::State& state) {
  const std::vector<double> r{std::sqrt(2.0) - 1, std::sqrt(3.0) - 1};
  for (auto _ : state) benchmark::DoNotOptimize(kronecker_approximate(r, {0.3, 0.7}, 0.01));
}
BENCHMARK(BM_Kronecker);

static void BM_EnumerateOrbit(benchmark::State& state) {
  const MatrixTuple t = make_hypercyclic_tuple(TupleClass::rotation_scaling_r, 2);
  const auto L = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orbit(t, L));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(orbit_size(2, L)));
}
BENCHMARK(BM_EnumerateOrbit)->Arg(100)->Arg(450);

static void BM_Construct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(make_hypercyclic_tuple(TupleClass::toeplitz_c, n));
}
BENCHMARK(BM_Construct)->DenseRange(1, 6);

BENCHMARK_MAIN();
