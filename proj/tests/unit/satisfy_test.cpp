#include <doctest.h>

#include <cmath>
#include <random>

#include "mfl/bounds.hpp"
#include "mfl/errors.hpp"
#include "mfl/goldens.hpp"
#include "mfl/satisfy.hpp"

using namespace mfl;
using namespace mfl::satisfy;

namespace {

SinrNetwork decoupled2() {
  SinrNetwork net;
  net.n = 2;
  net.gains = {{1.0, 0.0}, {0.0, 1.0}};
  net.noise = 1.0;
  net.targets = {2.0, 4.0};
  net.caps = {10.0, 10.0};
  return net;
}

const MeanFieldSinr kScaled{20.0, 0.3, 1.0 / 30.0, 20.0};

// Seeded feasible instance: diagonally dominant gains scaled until the
// normalized cross matrix is a comfortable contraction.
SinrNetwork random_feasible(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SinrNetwork net;
  net.n = n;
  net.gains.assign(n, std::vector<double>(n));
  net.targets.resize(n);
  net.caps.assign(n, 1.0); // placeholder until the solution scale is known
  net.noise = 0.1 + unit(rng);
  for (int j = 0; j < n; ++j) {
    net.targets[j] = 0.5 + 1.5 * unit(rng);
    for (int jp = 0; jp < n; ++jp)
      net.gains[j][jp] = jp == j ? 0.5 + 1.5 * unit(rng) : 0.3 * unit(rng);
  }
  for (;;) {
    auto report = feasibility(net);
    if (report.rho < 0.8) break;
    for (int j = 0; j < n; ++j)
      for (int jp = 0; jp < n; ++jp)
        if (jp != j) net.gains[j][jp] *= 0.5;
  }
  auto report = feasibility(net);
  REQUIRE(report.a_star.has_value());
  for (int j = 0; j < n; ++j) net.caps[j] = 2.0 * (*report.a_star)[j];
  return net;
}

} // namespace

TEST_CASE("sinr payoffs and satisfaction flags") {
  const auto report = sinr(decoupled2(), {3.0, 5.0});
  CHECK(report.payoff[0] == 3.0);
  CHECK(report.payoff[1] == 5.0);
  CHECK(report.satisfied[0]);
  CHECK(report.satisfied[1]);

  const auto idle = sinr(decoupled2(), {0.0, 5.0});
  CHECK(idle.payoff[0] == 0.0);
  CHECK(!idle.satisfied[0]);

  // Scaled single-class stand-in at the solution value.
  CHECK(meanfield_sinr_payoff(kScaled, 18.0) ==
        doctest::Approx(20.0).epsilon(1e-14));
}

TEST_CASE("spectral radius of small nonnegative matrices") {
  CHECK(spectral_radius({{0.0, 2.0}, {2.0, 0.0}}) ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(spectral_radius({{0.0, 0.3}, {0.2, 0.0}}) ==
        doctest::Approx(std::sqrt(0.06)).epsilon(1e-10));
  // cyclic 3x3: rho = (abc)^(1/3)
  CHECK(spectral_radius({{0, 0.5, 0}, {0, 0, 0.4}, {0.9, 0, 0}}) ==
        doctest::Approx(std::cbrt(0.5 * 0.4 * 0.9)).epsilon(1e-10));
  // complete graph adjacency: rho = 2
  CHECK(spectral_radius({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}) ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(spectral_radius({{0.0, 0.0}, {0.0, 0.0}}) == 0.0);
}

TEST_CASE("feasibility on decoupled and infeasible networks") {
  const auto report = feasibility(decoupled2());
  CHECK(report.rho == 0.0);
  CHECK(report.feasible);
  REQUIRE(report.a_star.has_value());
  CHECK((*report.a_star)[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK((*report.a_star)[1] == doctest::Approx(4.0).epsilon(1e-12));

  SinrNetwork coupled = decoupled2();
  coupled.gains = {{1.0, 2.0}, {2.0, 1.0}};
  coupled.targets = {1.0, 1.0};
  const auto bad = feasibility(coupled);
  CHECK(bad.rho == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(!bad.feasible);
  CHECK(!bad.a_star.has_value());
}

TEST_CASE("interior solutions meet every target exactly") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto net = random_feasible(rng, n);
    const auto report = feasibility(net);
    REQUIRE(report.feasible);
    const auto at_solution = sinr(net, *report.a_star);
    for (int j = 0; j < n; ++j) {
      CHECK((*report.a_star)[j] > 0.0);
      CHECK((*report.a_star)[j] <= net.caps[j]);
      CHECK(std::abs(at_solution.payoff[j] - net.targets[j]) <= 1e-10);
    }
  }
}

TEST_CASE("banach-picard learning reaches the satisfactory solution") {
  std::mt19937_64 rng(99);
  const auto net = random_feasible(rng, 4);
  const auto report = feasibility(net);
  std::vector<double> a0;
  for (double v : *report.a_star) a0.push_back(0.5 * v);

  SatisfyOptions options;
  options.record_reads = true;
  const auto run = banach_picard_satisfy(net, a0,
                                         {.tol = 1e-13, .max_iters = 2000},
                                         options);
  CHECK(run.log.stop_reason == StopReason::residual_below_tol);
  const auto final_report = sinr(net, run.log.actions.back());
  for (int j = 0; j < net.n; ++j)
    CHECK(std::abs(final_report.payoff[j] - net.targets[j]) <= 1e-8);
  CHECK(run.local_only());
  CHECK(!run.reads.empty());
}

TEST_CASE("stationarity at the interior solution") {
  std::mt19937_64 rng(5);
  const auto net = random_feasible(rng, 3);
  const auto report = feasibility(net);
  const auto run = banach_picard_satisfy(net, *report.a_star,
                                         {.tol = 1e-10, .max_iters = 50});
  CHECK(run.log.stop_reason == StopReason::residual_below_tol);
  CHECK(run.log.actions.size() <= 3);
  const auto payoffs = run.log.payoffs.front();
  for (int j = 0; j < net.n; ++j)
    CHECK(std::abs(payoffs[j] - net.targets[j]) <= 1e-10);
}

TEST_CASE("infeasible targets drive the profile to the caps") {
  SinrNetwork net = decoupled2();
  net.gains = {{1.0, 1.0}, {1.0, 1.0}};
  net.targets = {5.0, 5.0}; // rho = 25 >> 1
  const auto report = feasibility(net);
  CHECK(report.rho >= 1.0);
  CHECK(!report.feasible);

  const auto run = banach_picard_satisfy(net, {1.0, 1.0},
                                         {.tol = 1e-12, .max_iters = 5000});
  CHECK(run.log.stop_reason == StopReason::cap_saturation);
  CHECK(run.log.actions.back()[0] == net.caps[0]);
  CHECK(run.log.actions.back()[1] == net.caps[1]);
}

TEST_CASE("zero realized payoff is a hard error") {
  const auto net = decoupled2();
  const ProfileOracle dead = [](const std::vector<double>& a) {
    return std::vector<double>(a.size(), 0.0);
  };
  CHECK_THROWS_AS(
      (void)banach_picard_satisfy(net, dead, {1.0, 1.0}, StopRule{}), Error);
}

TEST_CASE("over-relaxed learning with lambda=1 equals the plain iteration") {
  std::mt19937_64 rng(17);
  const auto net = random_feasible(rng, 3);
  std::vector<double> a0(3, 0.01);
  const auto plain =
      banach_picard_satisfy(net, a0, {.tol = 1e-12, .max_iters = 60});
  const auto relaxed = reverse_ishikawa_satisfy(
      net, a0, Schedule::reverse_ishikawa(1.0), {.tol = 1e-12, .max_iters = 60});
  REQUIRE(plain.log.actions.size() == relaxed.log.actions.size());
  for (std::size_t t = 0; t < plain.log.actions.size(); ++t)
    for (int j = 0; j < 3; ++j)
      CHECK(plain.log.actions[t][j] == relaxed.log.actions[t][j]);
}

TEST_CASE("scaled single-class columns match the reference run") {
  const auto bp = meanfield_satisfy(kScaled, 2.0, MeanFieldScheme::picard,
                                    {.tol = 1e-300, .max_iters = 49});
  CHECK(bp.closed_form_valid);
  CHECK(bp.m_star == doctest::Approx(18.0).epsilon(1e-14));
  CHECK(bp.interior);
  const auto bp_vals = bp.traj.scalars();
  REQUIRE(bp_vals.size() == 50);
  for (int t = 0; t < 50; ++t)
    CHECK(std::abs(bp_vals[t] - goldens::kTable3BanachPicard[t]) < 1e-12);
  CHECK(bp.traj.final_residual() ==
        doctest::Approx(1.2547e-8).epsilon(5e-4));

  const auto lambda = Schedule::reverse_ishikawa(5.0 / 3.0);
  const auto ri =
      meanfield_satisfy(kScaled, 2.0, MeanFieldScheme::reverse_ishikawa,
                        {.tol = 1e-300, .max_iters = 25}, &lambda);
  const auto ri_vals = ri.traj.scalars();
  REQUIRE(ri_vals.size() == 26);
  for (int t = 0; t < 26; ++t)
    CHECK(std::abs(ri_vals[t] - goldens::kTable3ReverseIshikawa[t]) < 1e-12);
  CHECK(ri.traj.final_residual() ==
        doctest::Approx(1.3941e-8).epsilon(5e-4));
}

TEST_CASE("error decay laws are exact on the affine map") {
  const auto bp = meanfield_satisfy(kScaled, 2.0, MeanFieldScheme::picard,
                                    {.tol = 1e-300, .max_iters = 25});
  const auto lambda = Schedule::reverse_ishikawa(5.0 / 3.0);
  const auto ri =
      meanfield_satisfy(kScaled, 2.0, MeanFieldScheme::reverse_ishikawa,
                        {.tol = 1e-300, .max_iters = 25}, &lambda);
  const double rho_bp = 20.0 / 30.0;
  const double rho_ri = (5.0 / 3.0) * rho_bp + (1.0 - 5.0 / 3.0);
  for (int t : {1, 10, 25}) {
    CHECK(std::abs(bp.traj.iterates[t][0] - 18.0) ==
          doctest::Approx(16.0 * std::pow(rho_bp, t)).epsilon(1e-10));
    CHECK(std::abs(ri.traj.iterates[t][0] - 18.0) ==
          doctest::Approx(16.0 * std::pow(rho_ri, t)).epsilon(1e-10));
  }
  // Over-relaxation is at least as fast at every step.
  for (int t = 1; t <= 25; ++t)
    CHECK(std::abs(ri.traj.iterates[t][0] - 18.0) <=
          std::abs(bp.traj.iterates[t][0] - 18.0));
}

TEST_CASE("restart acceleration on the scaled network") {
  const auto st = meanfield_satisfy(kScaled, 12.0,
                                    MeanFieldScheme::steffensen,
                                    {.tol = 1e-300, .max_iters = 4});
  REQUIRE(st.traj.size() >= 2);
  CHECK(std::abs(st.traj.iterates[1][0] - 18.0) <= 2e-14);
  CHECK(st.traj.residuals[1] <= 1e-13);
  CHECK(st.traj.evaluations_at[1] <= 6);
  CHECK(!st.steffensen_probes.empty());
}

TEST_CASE("saturation of the infeasible scaled network") {
  const MeanFieldSinr heavy{40.0, 0.3, 1.0 / 30.0, 20.0};
  CHECK(!meanfield_satisfy(heavy, 2.0, MeanFieldScheme::picard,
                           {.tol = 1e-300, .max_iters = 60})
             .closed_form_valid);
  const auto run = meanfield_satisfy(heavy, 2.0, MeanFieldScheme::picard,
                                     {.tol = 1e-12, .max_iters = 60});
  CHECK(run.traj.final_scalar() == 20.0);
}

TEST_CASE("measured first passage agrees with the geometric planner") {
  const double d0 = 16.0, rho = 2.0 / 3.0;
  for (double eta : {1e-2, 1e-4, 1e-6}) {
    const auto run = meanfield_satisfy(kScaled, 2.0, MeanFieldScheme::picard,
                                       {.tol = 1e-300, .max_iters = 200});
    int measured = -1;
    for (std::size_t t = 0; t < run.traj.size(); ++t)
      if (std::abs(run.traj.iterates[t][0] - 18.0) <= eta) {
        measured = static_cast<int>(t);
        break;
      }
    REQUIRE(measured >= 0);
    const auto planned = bounds::geometric_time(rho, d0, eta);
    CHECK(measured <= planned.T_eta);
    CHECK(planned.T_eta <= measured + 1);
  }
}

TEST_CASE("network validation") {
  SinrNetwork bad = decoupled2();
  bad.gains[0][0] = 0.0;
  CHECK_THROWS_AS((void)sinr(bad, {1.0, 1.0}), Error);

  SinrNetwork negative = decoupled2();
  negative.noise = -1.0;
  CHECK_THROWS_AS((void)feasibility(negative), Error);

  CHECK_THROWS_AS(
      (void)banach_picard_satisfy(decoupled2(), {0.0, 1.0}, StopRule{}),
      Error);
}
