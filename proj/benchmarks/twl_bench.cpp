#include <benchmark/benchmark.h>

#include "twl/characters.hpp"
#include "twl/singer.hpp"
#include "twl/verify.hpp"

namespace {

using namespace twl;

void BM_TowerBuild(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(FieldTower::build(2, 1, k));
}
BENCHMARK(BM_TowerBuild)->Arg(8)->Arg(12)->Arg(16);

void BM_WeightsExhaustive(benchmark::State& state) {
  const FieldTower t = FieldTower::build(2, static_cast<unsigned>(state.range(0)), 2);
  const TwoZeroCode code = TwoZeroCode::canonical(t, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(code, {}, Enumeration::Exhaustive));
}
BENCHMARK(BM_WeightsExhaustive)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_WeightsOrbits(benchmark::State& state) {
  const FieldTower t = FieldTower::build(2, static_cast<unsigned>(state.range(0)), 2);
  const TwoZeroCode code = TwoZeroCode::canonical(t, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(code, {}, Enumeration::Orbits));
}
BENCHMARK(BM_WeightsOrbits)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_GaussSumTable(benchmark::State& state) {
  const FieldTower t = FieldTower::build(2, 1, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(GaussSumTable(t));
}
BENCHMARK(BM_GaussSumTable)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Multipliers(benchmark::State& state) {
  const FieldTower t = FieldTower::build(2, 1, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multipliers(t));
}
BENCHMARK(BM_Multipliers)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SearchTower(benchmark::State& state) {
  const FieldTower t = FieldTower::build(2, 3, 2);
  SearchOptions opt;
  opt.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_second_type(t, opt));
}
BENCHMARK(BM_SearchTower)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
