#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mfl/iteration_map.hpp"
#include "mfl/trajectory.hpp"

namespace mfl::accel {

/// Root form g(x) = f(x) - x of a fixed-point problem, or any scalar root
/// problem. derivatives[k-1] evaluates g^(k). associated_map, when present,
/// is the fixed-point map used to auto-seed the secant method; without it
/// the seed falls back to g(x0) + x0.
struct RootProblem {
  std::function<double(double)> g;
  std::vector<std::function<double(double)>> derivatives;
  double lo = -kInf;
  double hi = kInf;
  std::optional<std::function<double(double)>> associated_map;
};

RootProblem root_form(const IterationMap& map);

struct HouseholderOptions {
  int order = 1;          // 1 = Newton, 2 = Halley, o >= 3 needs g^(1..o)
  double multiplicity = 1.0; // damping k for multiple roots (order 1 only)
};

/// Iterate x <- x + o (1/g)^(o-1)(x) / (1/g)^(o)(x). Orders 1 and 2 use the
/// closed Newton/Halley forms; missing g'/g'' fall back to central
/// differences with step max(1e-6, 1e-6 |x|). Orders >= 3 require the
/// derivative stack (Error(missing_derivatives)). Stops on |g(x)| <= tol,
/// max_iters, or the iterate leaving [lo, hi] (StopReason::domain_violation).
/// Throws Error(derivative_vanishes) when an update denominator falls below
/// 1e-300 in magnitude.
Trajectory householder_iterate(const RootProblem& p, HouseholderOptions opts,
                               double x0, const StopRule& stop);

/// One update of the generic (1/g)-derivative route, valid for any order
/// with a sufficient derivative stack. The closed forms above are algebraic
/// specializations of this step.
double householder_step_general(const RootProblem& p, int order, double x);

/// Two-step-memory secant iteration; one g evaluation per update after
/// startup (the previous value is cached). x1 defaults to the associated
/// map's value at x0, else g(x0) + x0. Throws Error(flat_secant) when
/// |g(x_t) - g(x_{t-1})| < 1e-300.
Trajectory secant_iterate(const RootProblem& p, double x0,
                          std::optional<double> x1, const StopRule& stop);

/// y_t = m_t - (m_{t+1} - m_t)^2 / (m_{t+2} - 2 m_{t+1} + m_t), one entry
/// per input triple (output length = input length - 2). A second difference
/// below 1e-300 in magnitude yields the newest point of the triple.
/// Throws Error(too_short) for fewer than three entries.
std::vector<double> aitken_transform(const std::vector<double>& seq);

/// Single combine used by aitken_transform and the Steffensen restart.
double aitken_combine(double a, double b, double c);

struct SteffensenResult {
  Trajectory outer;                               // restart points
  std::vector<std::pair<double, double>> probes;  // (f(z), f(f(z))) per step
};

/// Outer loop: m1 = f(z), m2 = f(m1), restart from the Aitken combine of
/// (z, m1, m2). Two evaluations per completed outer step; residuals are
/// d(z, f(z)). An Aitken value outside the map domain throws
/// Error(domain_violation) -- wrap f with a projection when that is not
/// wanted.
SteffensenResult steffensen_iterate(const IterationMap& f, double x0,
                                    const StopRule& stop);

struct OrderEstimate {
  double o_hat = 0.0;
  double c1_hat = 0.0;
  int window_begin = 0;
  int window_end = 0; // exclusive, indices into the error sequence
};

/// Empirical convergence order from consecutive error ratios:
/// o_hat = median of log(e_{t+1}/e_t) / log(e_t/e_{t-1}),
/// c1_hat = median of e_{t+1} / e_t^o_hat. Requires >= 4 positive errors,
/// strictly decreasing (Error(nonmonotone_errors) / Error(too_short)).
OrderEstimate estimate_order(const std::vector<double>& errors);

} // namespace mfl::accel
