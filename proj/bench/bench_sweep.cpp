// Serial reference sweep vs. the OpenMP sweep over the same plan.

#include "ssdsim/sweep.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

using namespace ssdsim;

namespace {

ExperimentPlan plan_for(std::int64_t megabytes) {
  auto plan = way_sweep_plan();
  plan.total_bytes = megabytes << 20;
  return plan;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto plan = plan_for(state.range(0));
  const Settings settings;
  for (auto _ : state) benchmark::DoNotOptimize(run_plan_serial(plan, settings));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plan.size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto plan = plan_for(state.range(0));
  const Settings settings;
  for (auto _ : state) benchmark::DoNotOptimize(run_plan(plan, settings));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plan.size()));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(4)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(4)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
