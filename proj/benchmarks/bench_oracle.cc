#include <benchmark/benchmark.h>

#include "ryuo/ryuo.h"

namespace ryuo {
namespace {

void BM_ClosedForm(benchmark::State& state) {
  const RuleSet rules = RuleSet::GeneralizedRyuo(3);
  Coord x = 17;
  for (auto _ : state) {
    benchmark::DoNotOptimize(GrundyClosedForm(rules, Position{x, 19}));
    x = (x + 1) & 1023;
  }
}
BENCHMARK(BM_ClosedForm);

void BM_RyuoOracle(benchmark::State& state) {
  const RuleSet rules = RuleSet::GeneralizedRyuo(state.range(1));
  const Region region = Region::Cube(2, state.range(0) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(BuildGrundyTable(rules, region));
  state.SetItemsProcessed(state.iterations() * region.cell_count());
}
BENCHMARK(BM_RyuoOracle)->Args({60, 3})->Args({60, 6})->Args({200, 3});

void BM_PassBackwardInduction(benchmark::State& state) {
  const Region region = Region::Cube(2, state.range(0) - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(OutcomeBackwardInduction(3, region));
  }
  state.SetItemsProcessed(state.iterations() * 2 * region.cell_count());
}
BENCHMARK(BM_PassBackwardInduction)->Arg(40)->Arg(200);

void BM_ThreeDimOracle(benchmark::State& state) {
  const Region region = Region::Cube(3, state.range(0) - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildGrundyTable(RuleSet::ThreeDim(), region));
  }
  state.SetItemsProcessed(state.iterations() * region.cell_count());
}
BENCHMARK(BM_ThreeDimOracle)->Arg(20);

void BM_EngineMove(benchmark::State& state) {
  const RuleSet rules = RuleSet::GeneralizedRyuo(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EngineMove(rules, Position{59, 58}));
  }
}
BENCHMARK(BM_EngineMove);

}  // namespace
}  // namespace ryuo

BENCHMARK_MAIN();
