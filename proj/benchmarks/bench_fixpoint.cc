#include <benchmark/benchmark.h>

#include <cmath>

#include "mfl/fixpoint.hpp"
#include "mfl/reproduce.hpp"

using namespace mfl;

namespace {

IterationMap resource_map() {
  return make_scalar_map(cli::presets::resource_sharing10, 0.0, 1.0, {},
                         "resource10");
}

void BM_picard(benchmark::State& state) {
  const auto map = make_scalar_map(cli::presets::chi_sqrt, 0.0, 100.0, {},
                                   "chi_sqrt");
  const StopRule stop{.tol = 1e-300,
                      .max_iters = static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto traj = fixpoint::iterate(map, Schedule::picard(), 4.0, stop);
    benchmark::DoNotOptimize(traj.final_scalar());
  }
}
BENCHMARK(BM_picard)->Arg(64)->Arg(512);

void BM_mann(benchmark::State& state) {
  const auto map = resource_map();
  const StopRule stop{.tol = 1e-300,
                      .max_iters = static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto traj = fixpoint::iterate(map, Schedule::mann(0.1), 0.005, stop);
    benchmark::DoNotOptimize(traj.final_scalar());
  }
}
BENCHMARK(BM_mann)->Arg(512);

void BM_ishikawa(benchmark::State& state) {
  const auto map = resource_map();
  const StopRule stop{.tol = 1e-300,
                      .max_iters = static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto traj =
        fixpoint::iterate(map, Schedule::ishikawa(0.2, 0.5), 0.005, stop);
    benchmark::DoNotOptimize(traj.final_scalar());
  }
}
BENCHMARK(BM_ishikawa)->Arg(512);

void BM_detect_cycle(benchmark::State& state) {
  const auto traj = fixpoint::iterate(
      resource_map(), Schedule::mann(0.9), 0.005,
      {.tol = 1e-300, .max_iters = static_cast<int>(state.range(0))});
  for (auto _ : state) {
    auto cycle = fixpoint::detect_cycle(traj, 32, 1e-9);
    benchmark::DoNotOptimize(cycle.has_value());
  }
}
BENCHMARK(BM_detect_cycle)->Arg(512);

} // namespace

BENCHMARK_MAIN();
