#include "langdual/clifford.hpp"
#include "langdual/oscillator.hpp"
#include "langdual/poincare_pairing.hpp"

#include <benchmark/benchmark.h>

using namespace langdual;

static void BM_BuildQ0(benchmark::State& state) {
  const OscillatorParams p{1, static_cast<std::size_t>(state.range(0)), 6.0, 4};
  for (auto _ : state) benchmark::DoNotOptimize(build_q0(p).q.nonZeros());
}
BENCHMARK(BM_BuildQ0)->Arg(400)->Arg(1600);

static void BM_Spectrum1D(benchmark::State& state) {
  const auto d = build_q0({1, static_cast<std::size_t>(state.range(0)), 6.0, 4});
  for (auto _ : state) benchmark::DoNotOptimize(spectral_check(d, 10).max_deviation());
}
BENCHMARK(BM_Spectrum1D)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);

static void BM_Spectrum2D(benchmark::State& state) {
  const auto d = build_q0({2, static_cast<std::size_t>(state.range(0)), 6.0, 4});
  for (auto _ : state) benchmark::DoNotOptimize(spectral_check(d, 6).max_deviation());
}
BENCHMARK(BM_Spectrum2D)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_CliffordProjection(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const auto p = clifford_projection(n);
    benchmark::DoNotOptimize((p * p).is_zero());
  }
}
BENCHMARK(BM_CliffordProjection)->DenseRange(1, 4);

static void BM_Pairing(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto a = random_bump(rng, 2);
  const auto b = random_bump(rng, 2);
  const Point x = random_point(rng, 2, -1, 1);
  const Point eta = random_point(rng, 2, 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pairing(a, b, x, eta));
}
BENCHMARK(BM_Pairing);
