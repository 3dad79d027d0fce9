#include <benchmark/benchmark.h>

#include <cmath>

#include "mfl/accel.hpp"
#include "mfl/reproduce.hpp"

using namespace mfl;
using namespace mfl::accel;

namespace {

RootProblem contest() {
  RootProblem p;
  p.g = [](double m) { return m * m - 2.0 * m - 3.0; };
  p.derivatives = {[](double m) { return 2.0 * m - 2.0; },
                   [](double) { return 2.0; }};
  p.lo = -100.0;
  p.hi = 100.0;
  p.associated_map = cli::presets::chi_sqrt;
  return p;
}

void BM_newton(benchmark::State& state) {
  const auto p = contest();
  for (auto _ : state) {
    auto traj = householder_iterate(p, {.order = 1}, 4.0,
                                    {.tol = 1e-14, .max_iters = 50});
    benchmark::DoNotOptimize(traj.final_scalar());
  }
}
BENCHMARK(BM_newton);

void BM_halley(benchmark::State& state) {
  const auto p = contest();
  for (auto _ : state) {
    auto traj = householder_iterate(p, {.order = 2}, 4.0,
                                    {.tol = 1e-14, .max_iters = 50});
    benchmark::DoNotOptimize(traj.final_scalar());
  }
}
BENCHMARK(BM_halley);

void BM_secant(benchmark::State& state) {
  const auto p = contest();
  for (auto _ : state) {
    auto traj =
        secant_iterate(p, 4.0, std::nullopt, {.tol = 1e-14, .max_iters = 50});
    benchmark::DoNotOptimize(traj.final_scalar());
  }
}
BENCHMARK(BM_secant);

void BM_steffensen(benchmark::State& state) {
  const auto map = make_scalar_map(cli::presets::chi_sqrt, 0.0, 100.0, {},
                                   "chi_sqrt");
  for (auto _ : state) {
    auto result =
        steffensen_iterate(map, 4.0, {.tol = 1e-14, .max_iters = 20});
    benchmark::DoNotOptimize(result.outer.final_scalar());
  }
}
BENCHMARK(BM_steffensen);

void BM_aitken(benchmark::State& state) {
  std::vector<double> seq;
  for (int t = 0; t < 64; ++t) seq.push_back(3.0 + std::pow(0.7, t));
  for (auto _ : state) {
    auto out = aitken_transform(seq);
    benchmark::DoNotOptimize(out.back());
  }
}
BENCHMARK(BM_aitken);

} // namespace
