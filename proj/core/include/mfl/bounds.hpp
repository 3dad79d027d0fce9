#pragma once

#include <cstdint>
#include <functional>

namespace mfl::bounds {

/// Every closed-form planner returns both the real-valued time T and the
/// integer iteration count T_eta = 1 + floor(max(0, T)).
struct TimeBound {
  double T = 0.0;
  std::int64_t T_eta = 1;
};

TimeBound make_time_bound(double T);

struct ContractionInputs {
  double alpha1; // contraction constant in (0,1)
  double d0;     // distance of the start to the fixed-point set
  double eta;    // target accuracy > 0
};

/// T = ln[d0 / (eta (1 - alpha1))] / ln(1/alpha1), from the estimate
/// d(a_t, a*) <= alpha1^t / (1 - alpha1) d(a0, a*).
TimeBound contraction_time(const ContractionInputs& in);

/// T = ln(d0/eta) / ln(1/rho): first-passage time of a plain geometric
/// decay d(a_t, a*) <= rho^t d0. Shared by the pseudocontractive and the
/// satisfaction-learning planners.
TimeBound geometric_time(double rho, double d0, double eta);

/// T = 16 d0^2 / (eta^2 pi) for nonexpansive maps under constant-step
/// averaging.
TimeBound nonexpansive_time(double d0, double eta);

/// Residual (asymptotic-regularity) bound at step t for the averaged scheme
/// with steps lambda(1..t) in (0,1):
///   bounded domain:   diameter / sqrt(pi sum lambda (1 - lambda))
///   unbounded domain: 2 d0     / sqrt(pi sum lambda (1 - lambda))
double residual_bound_bounded(double diameter,
                              const std::function<double(int)>& lambda, int t);
double residual_bound_unbounded(double d0,
                                const std::function<double(int)>& lambda,
                                int t);

/// Lipschitz constant L, pseudocontractivity constant k in (0,1), and the
/// auxiliary constant s (stored for completeness; no formula consumes it).
struct PseudocontractiveParams {
  double L;
  double k;
  double s = 0.0;

  double lambda_bar() const;  // k / ((L+1)(L+2-k))
  double lambda_star() const; // -1 + sqrt(1 + lambda_bar)
  double rho(double lambda) const;
};

struct PseudocontractiveBound {
  double lambda_star;
  double rho_star;
  TimeBound time;
};

PseudocontractiveBound pseudocontractive_time(
    const PseudocontractiveParams& p, double d0, double eta);

struct SpeedupInputs {
  double eta0;     // initial error, in (0,1)
  double eta_star; // target error > 0
  double c2;       // scheme constant in (0,1)
  int o;           // speedup order >= 1 (convergence order o+1)
};

/// T = ln[ ln(1/(eta* c2^(1/o))) / ln(1/(eta0 c2^(1/o))) ] / ln(o+1).
/// Requires eta0 c2^(1/o) < 1 and eta* c2^(1/o) < 1; outside that regime the
/// theorem does not apply and Error(invalid_inputs) is thrown.
TimeBound speedup_time(const SpeedupInputs& in);

/// Error envelope eta_t <= c2^(((o+1)^t - 1)/o) eta0^((o+1)^t), evaluated in
/// log space.
double speedup_error(const SpeedupInputs& in, int t);

/// Time-rescaling of the flow b' = lambda_t f(b) against a' = f(a):
/// b_t = a_{g(t)} with g(t) = integral_0^t lambda, so a target reached by a
/// at time T_a is reached by b at T_b = g^{-1}(T_a).
struct RescaleSchedule {
  enum class Kind { constant, exponential, general } kind = Kind::constant;
  double value = 1.0;                      // constant lambda
  std::function<double(double)> fn;        // general lambda(s)

  static RescaleSchedule constant_rate(double lambda);
  static RescaleSchedule exponential(); // lambda_s = e^s
  static RescaleSchedule general(std::function<double(double)> lambda);
};

/// Closed forms T_a/lambda and ln(T_a + 1) for the constant and exponential
/// schedules; bisection on the adaptively-quadratured g (relative tolerance
/// 1e-10) otherwise. Throws Error(unreachable_time) when g stays below T_a.
double rescaled_time(double T_a, const RescaleSchedule& schedule);

} // namespace mfl::bounds
