#pragma once

#include <cstdint>
#include <vector>

#include "mfl/geometry.hpp"

namespace mfl {

enum class StopReason {
  residual_below_tol,
  max_iters,
  cycle_detected,
  domain_violation,
  cap_saturation,
};

const char* to_string(StopReason reason) noexcept;

/// Termination rule for iterative runs. tol applies to the residual
/// d(x_t, f(x_t)); max_iters bounds the number of updates.
struct StopRule {
  double tol = 1e-10;
  int max_iters = 1000;
  bool cycle_check = false;
};

/// Ordered iterates with their residuals and the running evaluation count.
/// residuals[t] = d(iterates[t], f(iterates[t])); evaluations_at[t] is the
/// total number of evaluator calls spent through that residual.
struct Trajectory {
  std::vector<Point> iterates;
  std::vector<double> residuals;
  std::vector<std::int64_t> evaluations_at;
  std::int64_t evaluations = 0;
  StopReason stop_reason = StopReason::max_iters;

  std::size_t size() const { return iterates.size(); }
  const Point& final_point() const { return iterates.back(); }
  double final_scalar() const { return iterates.back()[0]; }
  double final_residual() const { return residuals.back(); }

  /// Scalar view of a 1-D trajectory.
  std::vector<double> scalars() const;
};

} // namespace mfl
