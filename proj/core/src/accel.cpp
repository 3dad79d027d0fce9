#include "mfl/accel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfl/errors.hpp"

namespace mfl::accel {

namespace {

constexpr double kTinyDenominator = 1e-300;

double fd_step(double x) { return std::max(1e-6, 1e-6 * std::abs(x)); }

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct DerivativeAccess {
  const RootProblem& p;
  std::int64_t evals = 0;

  double g(double x) {
    ++evals;
    return p.g(x);
  }
  // k >= 1. Falls back to central differences for k in {1, 2} only.
  double d(int k, double x) {
    if (k <= static_cast<int>(p.derivatives.size())) {
      ++evals;
      return p.derivatives[k - 1](x);
    }
    const double h = fd_step(x);
    if (k == 1) return (g(x + h) - g(x - h)) / (2.0 * h);
    if (k == 2) return (g(x + h) - 2.0 * g(x) + g(x - h)) / (h * h);
    throw Error(ErrorCode::missing_derivatives,
                "order " + std::to_string(k) +
                    " derivative of g is not supplied");
  }
};

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Derivatives of u = 1/g up to order `order` at x, via the Leibniz
// recurrence on u g = 1: u^(k) = -(1/g) sum_{i<k} C(k,i) u^(i) g^(k-i).
std::vector<double> reciprocal_derivatives(DerivativeAccess& acc, int order,
                                           double x) {
  const double gx = acc.g(x);
  if (std::abs(gx) < kTinyDenominator)
    throw Error(ErrorCode::derivative_vanishes, "g vanishes at the iterate");
  std::vector<double> u(order + 1);
  u[0] = 1.0 / gx;
  for (int k = 1; k <= order; ++k) {
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += binomial(k, i) * u[i] * acc.d(k - i, x);
    u[k] = -s / gx;
  }
  return u;
}

} // namespace

RootProblem root_form(const IterationMap& map) {
  RootProblem p;
  const IterationMap f = map;
  p.g = [f](double x) { return f(x) - x; };
  p.lo = map.domain.lo[0];
  p.hi = map.domain.hi[0];
  p.associated_map = [f](double x) { return f(x); };
  if (!map.derivatives.empty()) {
    // g' = f' - 1; higher derivatives coincide with f's.
    auto f1 = map.derivatives[0];
    p.derivatives.push_back([f1](double x) { return f1(x) - 1.0; });
    for (std::size_t k = 1; k < map.derivatives.size(); ++k)
      p.derivatives.push_back(map.derivatives[k]);
  }
  return p;
}

double householder_step_general(const RootProblem& p, int order, double x) {
  DerivativeAccess acc{p};
  auto u = reciprocal_derivatives(acc, order, x);
  if (std::abs(u[order]) < kTinyDenominator)
    throw Error(ErrorCode::derivative_vanishes,
                "vanishing (1/g) derivative in update denominator");
  return x + order * u[order - 1] / u[order];
}

Trajectory householder_iterate(const RootProblem& p, HouseholderOptions opts,
                               double x0, const StopRule& stop) {
  if (opts.order < 1)
    throw Error(ErrorCode::invalid_inputs, "householder order must be >= 1");
  if (opts.order >= 3 &&
      static_cast<int>(p.derivatives.size()) < opts.order)
    throw Error(ErrorCode::missing_derivatives,
                "order >= 3 requires the g derivative stack");

  Trajectory traj;
  traj.iterates.push_back({x0});
  DerivativeAccess acc{p};
  double x = x0;
  for (;;) {
    const double gx = acc.g(x);
    traj.evaluations = acc.evals;
    traj.residuals.push_back(std::abs(gx));
    traj.evaluations_at.push_back(traj.evaluations);
    if (std::abs(gx) <= stop.tol) {
      traj.stop_reason = StopReason::residual_below_tol;
      break;
    }
    if (static_cast<int>(traj.iterates.size()) - 1 >= stop.max_iters) {
      traj.stop_reason = StopReason::max_iters;
      break;
    }

    double next;
    if (opts.order == 1) {
      const double g1 = acc.d(1, x);
      if (std::abs(g1) < kTinyDenominator)
        throw Error(ErrorCode::derivative_vanishes, "g' vanished (Newton)");
      next = x - opts.multiplicity * gx / g1;
    } else if (opts.order == 2) {
      const double g1 = acc.d(1, x);
      const double g2 = acc.d(2, x);
      const double den = 2.0 * g1 * g1 - gx * g2;
      if (std::abs(den) < kTinyDenominator)
        throw Error(ErrorCode::derivative_vanishes,
                    "Halley denominator vanished");
      next = x - 2.0 * gx * g1 / den;
    } else {
      next = householder_step_general(p, opts.order, x);
      acc.evals += opts.order + 1; // g plus g^(1..o) inside the general step
    }
    if (next < p.lo || next > p.hi || !std::isfinite(next)) {
      traj.stop_reason = StopReason::domain_violation;
      break;
    }
    traj.iterates.push_back({next});
    x = next;
    traj.evaluations = acc.evals;
  }
  traj.evaluations = acc.evals;
  return traj;
}

Trajectory secant_iterate(const RootProblem& p, double x0,
                          std::optional<double> x1, const StopRule& stop) {
  Trajectory traj;
  DerivativeAccess acc{p};

  double prev = x0;
  double g_prev = acc.g(prev);
  traj.iterates.push_back({prev});
  traj.residuals.push_back(std::abs(g_prev));
  traj.evaluations_at.push_back(acc.evals);
  if (std::abs(g_prev) <= stop.tol) {
    traj.stop_reason = StopReason::residual_below_tol;
    traj.evaluations = acc.evals;
    return traj;
  }

  double cur;
  if (x1) {
    cur = *x1;
  } else if (p.associated_map) {
    cur = (*p.associated_map)(x0);
  } else {
    cur = g_prev + x0;
  }
  double g_cur = acc.g(cur);
  traj.iterates.push_back({cur});
  traj.residuals.push_back(std::abs(g_cur));
  traj.evaluations_at.push_back(acc.evals);
  traj.stop_reason = StopReason::max_iters;

  if (std::abs(g_cur) <= stop.tol) {
    traj.stop_reason = StopReason::residual_below_tol;
    traj.evaluations = acc.evals;
    return traj;
  }

  // One fresh g evaluation per update; g(prev) is carried over.
  for (int updates = 0; updates < stop.max_iters; ++updates) {
    const double dg = g_cur - g_prev;
    if (std::abs(dg) < kTinyDenominator)
      throw Error(ErrorCode::flat_secant,
                  "g values coincide; secant step undefined");
    const double next = cur - g_cur * (cur - prev) / dg;
    if (next < p.lo || next > p.hi || !std::isfinite(next)) {
      traj.stop_reason = StopReason::domain_violation;
      break;
    }
    prev = cur;
    g_prev = g_cur;
    cur = next;
    g_cur = acc.g(cur);
    traj.iterates.push_back({cur});
    traj.residuals.push_back(std::abs(g_cur));
    traj.evaluations_at.push_back(acc.evals);
    if (std::abs(g_cur) <= stop.tol) {
      traj.stop_reason = StopReason::residual_below_tol;
      break;
    }
  }
  traj.evaluations = acc.evals;
  return traj;
}

double aitken_combine(double a, double b, double c) {
  const double second_difference = c - 2.0 * b + a;
  if (std::abs(second_difference) < kTinyDenominator) return c;
  const double delta = b - a;
  return a - delta * delta / second_difference;
}

std::vector<double> aitken_transform(const std::vector<double>& seq) {
  if (seq.size() < 3)
    throw Error(ErrorCode::too_short, "Aitken needs at least three entries");
  std::vector<double> out(seq.size() - 2);
  for (std::size_t t = 0; t + 2 < seq.size(); ++t)
    out[t] = aitken_combine(seq[t], seq[t + 1], seq[t + 2]);
  return out;
}

SteffensenResult steffensen_iterate(const IterationMap& f, double x0,
                                    const StopRule& stop) {
  SteffensenResult result;
  Trajectory& traj = result.outer;
  traj.iterates.push_back({x0});

  double z = x0;
  for (;;) {
    const double m1 = f(z);
    ++traj.evaluations;
    traj.residuals.push_back(std::abs(m1 - z));
    traj.evaluations_at.push_back(traj.evaluations);
    if (traj.residuals.back() <= stop.tol) {
      traj.stop_reason = StopReason::residual_below_tol;
      break;
    }
    if (static_cast<int>(traj.iterates.size()) - 1 >= stop.max_iters) {
      traj.stop_reason = StopReason::max_iters;
      break;
    }
    const double m2 = f(m1);
    ++traj.evaluations;
    result.probes.emplace_back(m1, m2);
    const double y = aitken_combine(z, m1, m2);
    if (y < f.domain.lo[0] || y > f.domain.hi[0])
      throw Error(ErrorCode::domain_violation,
                  "Aitken restart value left the domain");
    traj.iterates.push_back({y});
    z = y;
  }
  return result;
}

OrderEstimate estimate_order(const std::vector<double>& errors) {
  if (errors.size() < 4)
    throw Error(ErrorCode::too_short,
                "order estimation needs >= 4 consecutive errors");
  for (std::size_t t = 0; t < errors.size(); ++t) {
    if (!(errors[t] > 0.0))
      throw Error(ErrorCode::invalid_inputs, "errors must be positive");
    if (t > 0 && !(errors[t] < errors[t - 1]))
      throw Error(ErrorCode::nonmonotone_errors,
                  "errors must be strictly decreasing");
  }
  std::vector<double> ratios;
  for (std::size_t t = 1; t + 1 < errors.size(); ++t)
    ratios.push_back(std::log(errors[t + 1] / errors[t]) /
                     std::log(errors[t] / errors[t - 1]));
  OrderEstimate est;
  est.o_hat = median(ratios);
  std::vector<double> constants;
  for (std::size_t t = 0; t + 1 < errors.size(); ++t)
    constants.push_back(errors[t + 1] / std::pow(errors[t], est.o_hat));
  est.c1_hat = median(constants);
  est.window_begin = 0;
  est.window_end = static_cast<int>(errors.size());
  return est;
}

} // namespace mfl::accel
