#include "mfl/bounds.hpp"

#include <cmath>
#include <numbers>

#include "mfl/errors.hpp"

namespace mfl::bounds {

namespace {
constexpr double kQuadratureRelTol = 1e-10;

double simpson(const std::function<double(double)>& f, double a, double b) {
  return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = simpson(f, a, m);
  const double right = simpson(f, m, b);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b) {
  if (a == b) return 0.0;
  const double whole = simpson(f, a, b);
  const double tol = kQuadratureRelTol * std::max(1.0, std::abs(whole));
  return adaptive_simpson(f, a, b, whole, tol, 48);
}
} // namespace

TimeBound make_time_bound(double T) {
  TimeBound b;
  b.T = T;
  b.T_eta = 1 + static_cast<std::int64_t>(std::floor(std::max(0.0, T)));
  return b;
}

TimeBound contraction_time(const ContractionInputs& in) {
  if (!(in.alpha1 > 0.0 && in.alpha1 < 1.0) || !(in.eta > 0.0) ||
      !(in.d0 >= 0.0))
    throw Error(ErrorCode::invalid_inputs,
                "need 0 < alpha1 < 1, eta > 0, d0 >= 0");
  if (in.d0 == 0.0) return make_time_bound(0.0);
  const double T = std::log(in.d0 / (in.eta * (1.0 - in.alpha1))) /
                   std::log(1.0 / in.alpha1);
  return make_time_bound(T);
}

TimeBound geometric_time(double rho, double d0, double eta) {
  if (!(rho > 0.0 && rho < 1.0) || !(eta > 0.0) || !(d0 >= 0.0))
    throw Error(ErrorCode::invalid_inputs, "need 0 < rho < 1, eta > 0");
  if (d0 == 0.0) return make_time_bound(0.0);
  return make_time_bound(std::log(d0 / eta) / std::log(1.0 / rho));
}

TimeBound nonexpansive_time(double d0, double eta) {
  if (!(d0 >= 0.0) || !(eta > 0.0))
    throw Error(ErrorCode::invalid_inputs, "need d0 >= 0, eta > 0");
  const double T = 16.0 * d0 * d0 / (eta * eta * std::numbers::pi);
  return make_time_bound(T);
}

namespace {
double averaging_mass(const std::function<double(int)>& lambda, int t) {
  double s = 0.0;
  for (int i = 1; i <= t; ++i) {
    const double l = lambda(i);
    if (!(l > 0.0 && l < 1.0))
      throw Error(ErrorCode::invalid_inputs,
                  "residual bound needs lambda_t in (0,1)");
    s += l * (1.0 - l);
  }
  return s;
}
} // namespace

double residual_bound_bounded(double diameter,
                              const std::function<double(int)>& lambda,
                              int t) {
  return diameter / std::sqrt(std::numbers::pi * averaging_mass(lambda, t));
}

double residual_bound_unbounded(double d0,
                                const std::function<double(int)>& lambda,
                                int t) {
  return 2.0 * d0 / std::sqrt(std::numbers::pi * averaging_mass(lambda, t));
}

double PseudocontractiveParams::lambda_bar() const {
  return k / ((L + 1.0) * (L + 2.0 - k));
}

double PseudocontractiveParams::lambda_star() const {
  return -1.0 + std::sqrt(1.0 + lambda_bar());
}

double PseudocontractiveParams::rho(double lambda) const {
  return (1.0 + (1.0 - k) * lambda +
          (L + 1.0) * (L + 2.0 - k) * lambda * lambda) /
         (1.0 + lambda);
}

PseudocontractiveBound pseudocontractive_time(
    const PseudocontractiveParams& p, double d0, double eta) {
  if (!(p.L > 0.0) || !(p.k > 0.0 && p.k < 1.0) || !(d0 > 0.0) ||
      !(eta > 0.0))
    throw Error(ErrorCode::invalid_inputs,
                "need L > 0, k in (0,1), d0 > 0, eta > 0");
  PseudocontractiveBound out;
  out.lambda_star = p.lambda_star();
  out.rho_star = p.rho(out.lambda_star);
  if (!(out.rho_star > 0.0 && out.rho_star < 1.0))
    throw Error(ErrorCode::invalid_inputs,
                "rho(lambda*) not in (0,1); theorem hypotheses violated");
  out.time = geometric_time(out.rho_star, d0, eta);
  return out;
}

TimeBound speedup_time(const SpeedupInputs& in) {
  if (!(in.c2 > 0.0 && in.c2 < 1.0) || !(in.eta0 > 0.0 && in.eta0 < 1.0) ||
      !(in.eta_star > 0.0) || in.o < 1)
    throw Error(ErrorCode::invalid_inputs,
                "need c2 in (0,1), eta0 in (0,1), eta* > 0, o >= 1");
  const double root = std::pow(in.c2, 1.0 / in.o);
  const double den_arg = in.eta0 * root;
  const double num_arg = in.eta_star * root;
  if (!(den_arg < 1.0) || !(num_arg < 1.0))
    throw Error(ErrorCode::invalid_inputs,
                "eta0 c2^(1/o) and eta* c2^(1/o) must lie below 1");
  const double T = std::log(std::log(1.0 / num_arg) / std::log(1.0 / den_arg)) /
                   std::log(in.o + 1.0);
  return make_time_bound(T);
}

double speedup_error(const SpeedupInputs& in, int t) {
  if (t < 0) throw Error(ErrorCode::invalid_inputs, "t must be >= 0");
  const double growth = std::pow(in.o + 1.0, t);
  const double log_bound = (growth - 1.0) / in.o * std::log(in.c2) +
                           growth * std::log(in.eta0);
  return std::exp(log_bound);
}

RescaleSchedule RescaleSchedule::constant_rate(double lambda) {
  RescaleSchedule s;
  s.kind = Kind::constant;
  s.value = lambda;
  return s;
}

RescaleSchedule RescaleSchedule::exponential() {
  RescaleSchedule s;
  s.kind = Kind::exponential;
  return s;
}

RescaleSchedule RescaleSchedule::general(std::function<double(double)> fn) {
  RescaleSchedule s;
  s.kind = Kind::general;
  s.fn = std::move(fn);
  return s;
}

double rescaled_time(double T_a, const RescaleSchedule& schedule) {
  if (!(T_a > 0.0)) throw Error(ErrorCode::invalid_inputs, "T_a must be > 0");
  switch (schedule.kind) {
    case RescaleSchedule::Kind::constant:
      if (!(schedule.value > 0.0))
        throw Error(ErrorCode::unreachable_time,
                    "constant rate must be positive");
      return T_a / schedule.value;
    case RescaleSchedule::Kind::exponential:
      return std::log(T_a + 1.0);
    case RescaleSchedule::Kind::general:
      break;
  }

  const auto& lambda = schedule.fn;

  // Bracket g(t) = T_a by doubling, accumulating the integral segment by
  // segment so each quadrature spans a well-scaled interval, then bisect.
  double lo = 0.0, g_lo = 0.0;
  double hi = 1.0;
  double g_hi = integrate(lambda, 0.0, hi);
  int doublings = 0;
  while (g_hi < T_a) {
    if (++doublings > 60)
      throw Error(ErrorCode::unreachable_time,
                  "integral of the schedule stays below T_a");
    lo = hi;
    g_lo = g_hi;
    hi *= 2.0;
    g_hi += integrate(lambda, lo, hi);
  }
  while (hi - lo > kQuadratureRelTol * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = g_lo + integrate(lambda, lo, mid);
    if (g_mid < T_a) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace mfl::bounds
