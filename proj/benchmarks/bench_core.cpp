#include <benchmark/benchmark.h>

#include "qwalk/ppm.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace {

void BM_MixedDistribution(benchmark::State& state) {
  const auto coin = qwalk::hadamard();
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qwalk::mixed_coin_distribution(coin, t));
  }
}
BENCHMARK(BM_MixedDistribution)->Arg(100)->Arg(400)->Arg(1600);

void BM_ConvolvePower(benchmark::State& state) {
  const auto block = qwalk::block_distribution(qwalk::hadamard(), 10);
  const long long m = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qwalk::convolve_power(block, m));
  }
}
BENCHMARK(BM_ConvolvePower)->Arg(10)->Arg(100)->Arg(1000);

void BM_SigmaQuadrature(benchmark::State& state) {
  const auto coin = qwalk::hadamard();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qwalk::sigma_squared_quadrature(coin, n));
  }
}
BENCHMARK(BM_SigmaQuadrature)->Arg(256)->Arg(2048)->Arg(16384);

void BM_BlockCharFn(benchmark::State& state) {
  const auto coin = qwalk::hadamard();
  const long long d = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qwalk::block_char_fn(coin, d, 0.7));
  }
}
BENCHMARK(BM_BlockCharFn)->Arg(8)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
