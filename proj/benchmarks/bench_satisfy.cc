#include <benchmark/benchmark.h>

#include <random>

#include "mfl/satisfy.hpp"

using namespace mfl;
using namespace mfl::satisfy;

namespace {

SinrNetwork make_network(int n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SinrNetwork net;
  net.n = n;
  net.gains.assign(n, std::vector<double>(n));
  net.targets.assign(n, 1.0);
  net.caps.assign(n, 50.0);
  net.noise = 0.5;
  for (int j = 0; j < n; ++j)
    for (int jp = 0; jp < n; ++jp)
      net.gains[j][jp] = jp == j ? 1.0 + unit(rng) : 0.2 * unit(rng) / n;
  return net;
}

void BM_feasibility(benchmark::State& state) {
  const auto net = make_network(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto report = feasibility(net);
    benchmark::DoNotOptimize(report.rho);
  }
}
BENCHMARK(BM_feasibility)->Arg(4)->Arg(16)->Arg(64);

void BM_spectral_radius(benchmark::State& state) {
  const auto net = make_network(static_cast<int>(state.range(0)));
  const auto report = feasibility(net);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_radius(report.M));
  }
}
BENCHMARK(BM_spectral_radius)->Arg(16)->Arg(64);

void BM_banach_picard_rounds(benchmark::State& state) {
  const auto net = make_network(static_cast<int>(state.range(0)));
  const std::vector<double> a0(net.n, 0.5);
  for (auto _ : state) {
    auto run =
        banach_picard_satisfy(net, a0, {.tol = 1e-12, .max_iters = 200});
    benchmark::DoNotOptimize(run.log.aggregates.back());
  }
}
BENCHMARK(BM_banach_picard_rounds)->Arg(4)->Arg(16);

void BM_meanfield_steffensen(benchmark::State& state) {
  const MeanFieldSinr mf{20.0, 0.3, 1.0 / 30.0, 20.0};
  for (auto _ : state) {
    auto run = meanfield_satisfy(mf, 12.0, MeanFieldScheme::steffensen,
                                 {.tol = 1e-13, .max_iters = 10});
    benchmark::DoNotOptimize(run.traj.final_scalar());
  }
}
BENCHMARK(BM_meanfield_steffensen);

} // namespace
