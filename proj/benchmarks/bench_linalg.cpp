#include "langdual/exact_linalg.hpp"
#include "langdual/weyl_group.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace langdual;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(-20, 20);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(4)->Arg(8);

static void BM_SolveModLattice(benchmark::State& state) {
  const RootDatum rd = build_simple(CartanType::E, 6, GroupForm::simply_connected());
  std::vector<IntegerMatrix> blocks;
  for (const auto& s : rd.simple_reflections()) blocks.push_back(s - IntegerMatrix::identity(6));
  const IntegerMatrix stacked = IntegerMatrix::stack(blocks);
  for (auto _ : state) benchmark::DoNotOptimize(solve_mod_lattice(stacked, false));
}
BENCHMARK(BM_SolveModLattice);

static void BM_WeylGenerate(benchmark::State& state) {
  const CartanType t = state.range(0) == 0 ? CartanType::D : state.range(0) == 1 ? CartanType::F : CartanType::E;
  const std::size_t n = state.range(0) == 2 ? 6 : 4;
  const RootDatum rd = build_simple(t, n, GroupForm::simply_connected());
  for (auto _ : state) benchmark::DoNotOptimize(WeylGroup::generate(rd).size());
  state.SetLabel(rd.label().to_string());
}
BENCHMARK(BM_WeylGenerate)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ConjugacyClasses(benchmark::State& state) {
  const RootDatum rd = build_simple(CartanType::F, 4, GroupForm::simply_connected());
  for (auto _ : state) {
    const auto w = WeylGroup::generate(rd);
    benchmark::DoNotOptimize(w.conjugacy_classes().size());
  }
}
BENCHMARK(BM_ConjugacyClasses)->Unit(benchmark::kMillisecond);
