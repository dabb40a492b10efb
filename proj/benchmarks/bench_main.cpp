#include <benchmark/benchmark.h>

#include "dt4/formulas.hpp"
#include "dt4/json_io.hpp"

using namespace dt4;

namespace {

void BM_EnumeratePartitions(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    count = enumerate_solid_partitions(n).size();
    benchmark::DoNotOptimize(count);
  }
  state.counters["partitions"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(4, 8);

void BM_Contribution(benchmark::State& state) {
  VarTablePtr vt = cy_table({});
  GroupAction g = GroupAction::z2z2();
  auto ps = enumerate_solid_partitions(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (auto& pi : ps) benchmark::DoNotOptimize(contribution(pi, g, *vt));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(ps.size()));
}
BENCHMARK(BM_Contribution)->DenseRange(3, 5);

void BM_DtSeriesModular(benchmark::State& state) {
  GroupAction g = GroupAction::zr(2);
  Engine eng(g);
  std::mt19937_64 rng(1);
  EvalPoint pt(*eng.vt, kPrimes[0], rng);
  PointCtx ctx{eng.vt, &pt};
  int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dt_partition_function(g, D, ctx));
}
BENCHMARK(BM_DtSeriesModular)->DenseRange(4, 6);

void BM_DtSeriesExact(benchmark::State& state) {
  GroupAction g = GroupAction::trivial();
  Engine eng(g);
  ExactCtx ctx{eng.vt};
  int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dt_partition_function(g, D, ctx));
}
BENCHMARK(BM_DtSeriesExact)->DenseRange(2, 3);

void BM_PlethysticExp(benchmark::State& state) {
  GroupAction g = GroupAction::zr(2);
  Engine eng(g);
  ExactCtx ctx{eng.vt};
  ExpArgument arg = build_orbifold_argument(g, eng.vt);
  int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(plethystic_exp_argument(arg, D, ctx));
}
BENCHMARK(BM_PlethysticExp)->DenseRange(2, 3);

void BM_CrcIdentity(benchmark::State& state) {
  GroupAction g = GroupAction::z2z2();
  for (auto _ : state) benchmark::DoNotOptimize(verify_crc(g, false));
}
BENCHMARK(BM_CrcIdentity);

}  // namespace

BENCHMARK_MAIN();
