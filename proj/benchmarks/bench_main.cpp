#include <benchmark/benchmark.h>

#include <random>

#include "sadic/comboset.hpp"
#include "sadic/cylinder.hpp"
#include "sadic/dimension.hpp"
#include "sadic/measure.hpp"

namespace {

void BM_MoranSolve(benchmark::State& state) {
  const sadic::MoranEquation eq = sadic::MoranEquation::from_alphabet(sadic::tilde_alphabet(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(sadic::moran_solve(eq).alpha);
}
BENCHMARK(BM_MoranSolve)->Arg(3)->Arg(8)->Arg(16);

void BM_CylinderEndpoints(benchmark::State& state) {
  const int s = 8;
  std::mt19937_64 rng(1);
  sadic::Digits base(static_cast<std::size_t>(state.range(0)));
  for (auto& c : base) c = 1 + static_cast<int>(rng() % 7);
  for (auto _ : state) benchmark::DoNotOptimize(sadic::cylinder_endpoints(s, 0, base));
}
BENCHMARK(BM_CylinderEndpoints)->Arg(4)->Arg(32)->Arg(256);

void BM_BoxCount(benchmark::State& state) {
  const auto a = sadic::block_alphabet(static_cast<int>(state.range(0)), 0);
  const auto hulls = sadic::prefix_hulls(a, 12);
  const std::vector<int> scales{4, 5, 6, 7, 8, 9, 10};
  for (auto _ : state) benchmark::DoNotOptimize(sadic::box_count_estimate(hulls, a.base(), scales, 12).slope);
  state.counters["hulls"] = static_cast<double>(hulls.size());
}
BENCHMARK(BM_BoxCount)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CoverStage(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sadic::cover_stage(3, 0, static_cast<std::size_t>(state.range(0))).total_length);
}
BENCHMARK(BM_CoverStage)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
