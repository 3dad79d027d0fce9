#include <doctest.h>

#include <cmath>

#include "mfl/bounds.hpp"
#include "mfl/errors.hpp"

using namespace mfl;
using namespace mfl::bounds;

namespace {

// First iteration with |x_t| <= eta for x_{t+1} = alpha x_t, x_0 = d0.
std::int64_t measured_first_passage(double alpha, double d0, double eta) {
  double x = d0;
  std::int64_t t = 0;
  while (std::abs(x) > eta) {
    x *= alpha;
    ++t;
  }
  return t;
}

} // namespace

TEST_CASE("contraction planner") {
  const auto b = contraction_time({0.5, 1.0, 1e-4});
  CHECK(b.T == doctest::Approx(14.2877).epsilon(1e-4));
  CHECK(b.T_eta == 15);

  // eta >= d0/(1 - alpha1) clamps to a single iteration.
  CHECK(contraction_time({0.5, 1.0, 2.5}).T_eta == 1);

  // The planner bound dominates the measured first-passage time.
  const auto wide = contraction_time({0.9, 2.0, 1e-6});
  CHECK(wide.T_eta == 160);
  CHECK(measured_first_passage(0.9, 2.0, 1e-6) == 138);
  CHECK(measured_first_passage(0.9, 2.0, 1e-6) <= wide.T_eta);

  CHECK_THROWS_AS((void)contraction_time({1.1, 1.0, 1e-4}), Error);
}

TEST_CASE("geometric first-passage planner matches simulation within one") {
  const auto b = geometric_time(0.9, 2.0, 1e-6);
  CHECK(b.T_eta == 138);
  for (double rho : {0.3, 0.5, 0.9}) {
    for (double d0 : {0.5, 1.0, 2.0}) {
      for (double eta : {1e-2, 1e-4, 1e-6}) {
        const auto bound = geometric_time(rho, d0, eta);
        const auto measured = measured_first_passage(rho, d0, eta);
        CHECK(measured <= bound.T_eta);
        CHECK(bound.T_eta <= measured + 1);
      }
    }
  }
}

TEST_CASE("nonexpansive planner") {
  const auto b = nonexpansive_time(1.0, 0.1);
  CHECK(b.T == doctest::Approx(509.2958).epsilon(1e-5));
  CHECK(b.T_eta == 510);
  CHECK(nonexpansive_time(0.0, 0.1).T_eta == 1);
}

TEST_CASE("residual envelope values") {
  const auto lambda_half = [](int) { return 0.5; };
  CHECK(residual_bound_bounded(1.0, lambda_half, 100) ==
        doctest::Approx(0.1128379167).epsilon(1e-8));
  CHECK(residual_bound_unbounded(1.0, lambda_half, 100) ==
        doctest::Approx(2.0 * 0.1128379167).epsilon(1e-8));
  CHECK_THROWS_AS((void)residual_bound_bounded(1.0, [](int) { return 1.5; }, 5),
                  Error);
}

TEST_CASE("pseudocontractive planner") {
  const PseudocontractiveParams p{1.0, 0.5, 0.0};
  CHECK(p.lambda_bar() == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(p.lambda_star() == doctest::Approx(0.0488088482).epsilon(1e-8));

  const auto b = pseudocontractive_time(p, 1.0, 1e-3);
  CHECK(b.rho_star == doctest::Approx(0.9880884817).epsilon(1e-8));
  CHECK(b.time.T_eta == 577);

  CHECK(pseudocontractive_time(p, 1.0, 2.0).time.T_eta == 1);
  CHECK_THROWS_AS((void)pseudocontractive_time({1.0, 1.5, 0.0}, 1.0, 1e-3),
                  Error);
}

TEST_CASE("speedup planner") {
  const SpeedupInputs in{0.5, 1e-4, 0.9, 1};
  const auto b = speedup_time(in);
  CHECK(b.T == doctest::Approx(3.5443).epsilon(1e-4));
  CHECK(b.T_eta == 4);

  CHECK(speedup_time({0.5, 0.5, 0.9, 1}).T == doctest::Approx(0.0));
  CHECK(speedup_time({0.5, 0.5, 0.9, 1}).T_eta == 1);

  CHECK(speedup_error({0.5, 1e-4, 0.9, 1}, 3) ==
        doctest::Approx(0.0018683472656250003).epsilon(1e-12));

  // Outside the theorem's hypotheses: eta* c2^(1/o) >= 1.
  CHECK_THROWS_AS((void)speedup_time({0.5, 3.0, 0.9, 1}), Error);
  CHECK_THROWS_AS((void)speedup_time({0.5, 1e-4, 1.2, 1}), Error);
}

TEST_CASE("speedup envelope dominates the unrolled recursion") {
  const SpeedupInputs in{0.5, 1e-4, 0.9, 1};
  double eta = in.eta0;
  for (int t = 1; t <= 6; ++t) {
    eta = in.c2 * eta * eta;
    CHECK(eta <= speedup_error(in, t) * (1.0 + 1e-12));
  }
}

TEST_CASE("time rescaling closed forms and quadrature route") {
  CHECK(rescaled_time(10.0, RescaleSchedule::constant_rate(2.0)) == 5.0);
  CHECK(rescaled_time(10.0, RescaleSchedule::exponential()) ==
        doctest::Approx(std::log(11.0)).epsilon(1e-12));

  // lambda_s = 1 + s integrates to t + t^2/2; t + t^2/2 = 4 at t = 2.
  const auto linear =
      RescaleSchedule::general([](double s) { return 1.0 + s; });
  CHECK(rescaled_time(4.0, linear) == doctest::Approx(2.0).epsilon(1e-8));

  // The closed forms agree with the quadrature route.
  const auto const2 = RescaleSchedule::general([](double) { return 2.0; });
  CHECK(rescaled_time(10.0, const2) == doctest::Approx(5.0).epsilon(1e-8));

  // integral of e^{-s} is bounded by 1 < T_a: unreachable.
  const auto decaying =
      RescaleSchedule::general([](double s) { return std::exp(-s); });
  CHECK_THROWS_AS((void)rescaled_time(4.0, decaying), Error);
}

TEST_CASE("planner monotonicity in eta and d0") {
  for (double alpha : {0.3, 0.9}) {
    std::int64_t prev = 0;
    for (double eta : {1e-2, 1e-4, 1e-6}) {
      const auto b = contraction_time({alpha, 1.0, eta});
      CHECK(b.T_eta >= prev);
      prev = b.T_eta;
    }
    prev = 1'000'000'000;
    for (double d0 : {2.0, 1.0, 0.5}) {
      const auto b = contraction_time({alpha, d0, 1e-4});
      CHECK(b.T_eta <= prev);
      prev = b.T_eta;
    }
  }
  std::int64_t prev = 0;
  for (double eta : {1e-1, 1e-2, 1e-3}) {
    CHECK(nonexpansive_time(1.0, eta).T_eta >= prev);
    prev = nonexpansive_time(1.0, eta).T_eta;
  }
}
