#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mfl/iteration_map.hpp"
#include "mfl/schedule.hpp"
#include "mfl/trajectory.hpp"

namespace mfl::fixpoint {

/// Window-based cycle detector defaults (see detect_cycle).
inline constexpr int kDefaultCycleMaxPeriod = 32;
inline constexpr double kDefaultCycleTol = 1e-9;

struct Cycle {
  int period = 0;
  std::vector<Point> points; // one full cycle, oldest first
};

/// Run the selected scheme from x0 until the residual d(x_t, f(x_t)) falls
/// to stop.tol, stop.max_iters updates have been taken, or (with
/// stop.cycle_check) a cycle is found in the trailing window.
///
/// Updates per kind, with lambda = lambda(t), mu = mu(t), t = 1,2,...:
///   picard            x <- f(x)
///   mann              x <- lambda f(x) + (1-lambda) x
///   ishikawa          y = mu f(x) + (1-mu) x;  x <- lambda f(y) + (1-lambda) x
///   reverse_ishikawa  x <- proj_box(lambda f(x) + (1-lambda) x)
///
/// Only reverse_ishikawa projects: its blend is not convex, so the update
/// can leave the box even when f is a self-map. Ishikawa costs two
/// evaluations per update; the others one. The final iterate's residual
/// costs one extra evaluation.
Trajectory iterate(const IterationMap& map, const Schedule& schedule,
                   const Point& x0, const StopRule& stop);

Trajectory iterate(const IterationMap& map, const Schedule& schedule,
                   double x0, const StopRule& stop);

/// Smallest period p <= max_period such that d(x_t, x_{t-p}) <= tol holds
/// over the last 4p iterates while the trajectory still moves
/// (max consecutive step > 10 tol, so converged runs are not reported as
/// period-1 cycles). Requires at least 2*max_period iterates
/// (Error(insufficient_history) otherwise). Returns the last full cycle as
/// representative points.
std::optional<Cycle> detect_cycle(const std::vector<Point>& iterates,
                                  int max_period, double tol);
std::optional<Cycle> detect_cycle(const Trajectory& traj, int max_period,
                                  double tol);

/// Sampled estimates of the contraction / Kannan / Chatterjea constants:
/// the maxima over n_pairs uniform pairs (a1, a2) of
///   alpha1: d(f a1, f a2) / d(a1, a2)
///   alpha2: d(f a1, f a2) / [d(a1, f a1) + d(a2, f a2)]
///   alpha3: d(f a1, f a2) / [d(a1, f a2) + d(a2, f a1)]
/// The estimates are lower bounds on the true constants (sampling can only
/// miss the worst pair). A vanishing denominator with a nonzero numerator
/// yields +inf; exactly-coincident pairs are skipped. Requires a bounded
/// domain (Error(unbounded_domain)).
struct ConditionReport {
  double alpha1_hat = 0.0;
  double kannan_alpha2_hat = 0.0;
  double chatterjea_alpha3_hat = 0.0;
  bool nonexpansive = false;
  int pairs_sampled = 0;
  // Sampling gives lower bounds only; the true constants may be larger.
  static constexpr const char* semantics = "lower bounds on true constants";
};

ConditionReport sample_map_conditions(const IterationMap& map, int n_pairs,
                                      std::uint64_t seed);

} // namespace mfl::fixpoint
