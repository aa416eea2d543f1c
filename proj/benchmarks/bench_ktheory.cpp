#include "langdual/equivariant_k.hpp"
#include "langdual/torus_fixed_points.hpp"

#include <benchmark/benchmark.h>

using namespace langdual;

namespace {

RootDatum pick(int which) {
  switch (which) {
    case 0: return build_simple(CartanType::A, 3, GroupForm::simply_connected());
    case 1: return build_simple(CartanType::B, 4, GroupForm::adjoint());
    case 2: return build_simple(CartanType::D, 4, GroupForm::simply_connected());
    default: return build_simple(CartanType::F, 4, GroupForm::simply_connected());
  }
}

}  // namespace

static void BM_EquivariantK(benchmark::State& state) {
  const RootDatum rd = pick(static_cast<int>(state.range(0)));
  const auto w = WeylGroup::generate(rd);
  for (auto _ : state) benchmark::DoNotOptimize(rational_equivariant_k(w).rank);
  state.SetLabel(rd.label().to_string());
}
BENCHMARK(BM_EquivariantK)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_VerifyDuality(benchmark::State& state) {
  const RootDatum rd = pick(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_duality(rd).equal);
  state.SetLabel(rd.label().to_string());
}
BENCHMARK(BM_VerifyDuality)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_FixedSet(benchmark::State& state) {
  const RootDatum rd = build_simple(CartanType::E, 6, GroupForm::simply_connected());
  const IntegerMatrix coxeter = [&] {
    IntegerMatrix c = IntegerMatrix::identity(6);
    for (const auto& s : rd.simple_reflections()) c = c * s;
    return c;
  }();
  for (auto _ : state) benchmark::DoNotOptimize(fixed_set(coxeter).components.size());
}
BENCHMARK(BM_FixedSet);
