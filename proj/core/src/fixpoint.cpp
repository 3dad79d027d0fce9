#include "mfl/fixpoint.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mfl/errors.hpp"

namespace mfl {

const char* to_string(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::residual_below_tol: return "residual_below_tol";
    case StopReason::max_iters: return "max_iters";
    case StopReason::cycle_detected: return "cycle_detected";
    case StopReason::domain_violation: return "domain_violation";
    case StopReason::cap_saturation: return "cap_saturation";
  }
  return "?";
}

std::vector<double> Trajectory::scalars() const {
  std::vector<double> out;
  out.reserve(iterates.size());
  for (const auto& p : iterates) out.push_back(p[0]);
  return out;
}

} // namespace mfl

namespace mfl::fixpoint {

namespace {

Point blend(double w_f, const Point& fx, double w_x, const Point& x) {
  Point out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = w_f * fx[i] + w_x * x[i];
  return out;
}

std::optional<Cycle> scan_for_cycle(const std::vector<Point>& xs,
                                    int max_period, double tol) {
  const int n = static_cast<int>(xs.size());
  for (int p = 1; p <= max_period; ++p) {
    if (5 * p > n) break;
    bool periodic = true;
    for (int t = n - 4 * p; t < n && periodic; ++t)
      periodic = distance(xs[t], xs[t - p]) <= tol;
    if (!periodic) continue;
    double max_step = 0.0;
    for (int t = n - 4 * p; t < n; ++t)
      max_step = std::max(max_step, distance(xs[t], xs[t - 1]));
    if (max_step <= 10.0 * tol) continue; // converged, not cycling
    Cycle c;
    c.period = p;
    c.points.assign(xs.end() - p, xs.end());
    return c;
  }
  return std::nullopt;
}

} // namespace

Trajectory iterate(const IterationMap& map, const Schedule& schedule,
                   const Point& x0, const StopRule& stop) {
  if (!map.domain.contains(x0))
    throw Error(ErrorCode::domain_violation, "x0 outside the map domain");
  if (stop.max_iters < 1)
    throw Error(ErrorCode::invalid_inputs, "max_iters must be >= 1");

  Trajectory traj;
  traj.iterates.push_back(x0);

  Point x = x0;
  for (int t = 1;; ++t) {
    Point fx = map(x);
    ++traj.evaluations;
    traj.residuals.push_back(distance(x, fx));
    traj.evaluations_at.push_back(traj.evaluations);

    if (traj.residuals.back() <= stop.tol) {
      traj.stop_reason = StopReason::residual_below_tol;
      break;
    }
    if (static_cast<int>(traj.iterates.size()) - 1 >= stop.max_iters) {
      traj.stop_reason = StopReason::max_iters;
      break;
    }
    if (stop.cycle_check &&
        static_cast<int>(traj.iterates.size()) >= 2 * kDefaultCycleMaxPeriod) {
      if (auto cycle = scan_for_cycle(traj.iterates, kDefaultCycleMaxPeriod,
                                      kDefaultCycleTol)) {
        traj.stop_reason = StopReason::cycle_detected;
        break;
      }
    }

    schedule.validate_step(t);
    const double lambda = schedule.lambda(t);
    const double mu = schedule.mu ? schedule.mu(t) : 0.0;
    Point next;
    switch (schedule.kind) {
      case SchemeKind::picard:
        next = fx;
        break;
      case SchemeKind::mann:
        next = blend(lambda, fx, 1.0 - lambda, x);
        break;
      case SchemeKind::ishikawa: {
        Point y = blend(mu, fx, 1.0 - mu, x);
        Point fy = map(y);
        ++traj.evaluations;
        next = blend(lambda, fy, 1.0 - lambda, x);
        break;
      }
      case SchemeKind::reverse_ishikawa:
        next = project_box(blend(lambda, fx, 1.0 - lambda, x), map.domain);
        break;
    }
    traj.iterates.push_back(next);
    x = std::move(next);
  }
  return traj;
}

Trajectory iterate(const IterationMap& map, const Schedule& schedule,
                   double x0, const StopRule& stop) {
  return iterate(map, schedule, Point{x0}, stop);
}

std::optional<Cycle> detect_cycle(const std::vector<Point>& iterates,
                                  int max_period, double tol) {
  if (max_period < 1 || tol <= 0.0)
    throw Error(ErrorCode::invalid_inputs, "detect_cycle parameters");
  if (static_cast<int>(iterates.size()) < 2 * max_period)
    throw Error(ErrorCode::insufficient_history,
                "need at least 2*max_period iterates");
  return scan_for_cycle(iterates, max_period, tol);
}

std::optional<Cycle> detect_cycle(const Trajectory& traj, int max_period,
                                  double tol) {
  return detect_cycle(traj.iterates, max_period, tol);
}

ConditionReport sample_map_conditions(const IterationMap& map, int n_pairs,
                                      std::uint64_t seed) {
  if (!map.domain.bounded())
    throw Error(ErrorCode::unbounded_domain,
                "condition sampling needs a bounded domain");
  if (n_pairs < 2)
    throw Error(ErrorCode::invalid_inputs, "need n_pairs >= 2");

  std::mt19937_64 rng(seed);
  const auto& box = map.domain;
  auto draw = [&]() {
    Point p(box.dimension());
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::uniform_real_distribution<double> dist(box.lo[i], box.hi[i]);
      p[i] = dist(rng);
    }
    return p;
  };

  ConditionReport report;
  auto quotient = [](double num, double den) {
    if (den == 0.0) return num == 0.0 ? 0.0 : kInf;
    return num / den;
  };
  for (int k = 0; k < n_pairs; ++k) {
    Point a1 = draw();
    Point a2 = draw();
    const double d12 = distance(a1, a2);
    if (d12 == 0.0) continue;
    Point f1 = map(a1);
    Point f2 = map(a2);
    const double dff = distance(f1, f2);
    report.alpha1_hat = std::max(report.alpha1_hat, dff / d12);
    report.kannan_alpha2_hat =
        std::max(report.kannan_alpha2_hat,
                 quotient(dff, distance(a1, f1) + distance(a2, f2)));
    report.chatterjea_alpha3_hat =
        std::max(report.chatterjea_alpha3_hat,
                 quotient(dff, distance(a1, f2) + distance(a2, f1)));
    ++report.pairs_sampled;
  }
  report.nonexpansive = report.alpha1_hat <= 1.0 + 1e-12;
  return report;
}

} // namespace mfl::fixpoint
