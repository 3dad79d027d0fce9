#include "mfl/satisfy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfl/accel.hpp"
#include "mfl/errors.hpp"
#include "mfl/fixpoint.hpp"

namespace mfl::satisfy {

void SinrNetwork::validate() const {
  if (n < 1 || gains.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::invalid_inputs, "bad gain matrix size");
  for (const auto& row : gains)
    if (row.size() != static_cast<std::size_t>(n))
      throw Error(ErrorCode::invalid_inputs, "gain matrix not square");
  if (!cross_factors.empty()) {
    if (cross_factors.size() != static_cast<std::size_t>(n))
      throw Error(ErrorCode::invalid_inputs, "bad cross factor size");
    for (int j = 0; j < n; ++j) {
      if (cross_factors[j].size() != static_cast<std::size_t>(n))
        throw Error(ErrorCode::invalid_inputs, "cross factors not square");
      for (int jp = 0; jp < n; ++jp)
        if (jp != j && !(cross_factors[j][jp] > 0.0))
          throw Error(ErrorCode::invalid_inputs,
                      "cross factors must be positive");
    }
  }
  if (!(noise > 0.0)) throw Error(ErrorCode::invalid_inputs, "noise <= 0");
  if (targets.size() != static_cast<std::size_t>(n) ||
      caps.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::invalid_inputs, "targets/caps size mismatch");
  for (int j = 0; j < n; ++j) {
    if (!(gains[j][j] > 0.0))
      throw Error(ErrorCode::invalid_inputs,
                  "own gain must be positive for player " + std::to_string(j));
    if (!(targets[j] > 0.0) || !(caps[j] > 0.0))
      throw Error(ErrorCode::invalid_inputs, "targets and caps must be > 0");
    for (int jp = 0; jp < n; ++jp)
      if (gains[j][jp] < 0.0)
        throw Error(ErrorCode::invalid_inputs, "gains must be nonnegative");
  }
}

double SinrNetwork::effective_gain(int j, int jp) const {
  const double eps = cross_factors.empty() ? 1.0 : cross_factors[j][jp];
  return gains[j][jp] * eps;
}

SinrReport sinr(const SinrNetwork& net, const std::vector<double>& a) {
  net.validate();
  if (a.size() != static_cast<std::size_t>(net.n))
    throw Error(ErrorCode::invalid_inputs, "profile size mismatch");
  SinrReport report;
  report.payoff.resize(net.n);
  report.satisfied.resize(net.n);
  for (int j = 0; j < net.n; ++j) {
    double interference = net.noise;
    for (int jp = 0; jp < net.n; ++jp)
      if (jp != j) interference += a[jp] * net.effective_gain(j, jp);
    report.payoff[j] = a[j] * net.gains[j][j] / interference;
    report.satisfied[j] = report.payoff[j] >= net.targets[j];
  }
  return report;
}

double spectral_radius(const std::vector<std::vector<double>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 0.0;
  double max_row_sum = 0.0;
  for (const auto& row : m) {
    double s = 0.0;
    for (double v : row) {
      if (v < 0.0)
        throw Error(ErrorCode::invalid_inputs,
                    "spectral_radius expects a nonnegative matrix");
      s += v;
    }
    max_row_sum = std::max(max_row_sum, s);
  }
  // Diagonal shift keeps the power iteration convergent on periodic
  // nonnegative matrices; the dominant eigenvalue shifts by exactly c.
  const double shift = 1.0 + max_row_sum;
  std::vector<double> v(n, 1.0), w(n);
  double lambda = 0.0;
  for (int it = 0; it < 200000; ++it) {
    for (int i = 0; i < n; ++i) {
      double s = shift * v[i];
      for (int j = 0; j < n; ++j) s += m[i][j] * v[j];
      w[i] = s;
    }
    double nrm = 0.0;
    for (double x : w) nrm = std::max(nrm, std::abs(x));
    if (nrm == 0.0) return 0.0;
    for (int i = 0; i < n; ++i) v[i] = w[i] / nrm;
    const double prev = lambda;
    lambda = nrm;
    if (it > 3 && std::abs(lambda - prev) <= 1e-13 * std::max(1.0, lambda))
      break;
  }
  return std::max(0.0, lambda - shift);
}

namespace {

// Direct elimination with partial pivoting; nullopt on a vanishing pivot.
std::optional<std::vector<double>> solve_linear(
    std::vector<std::vector<double>> A, std::vector<double> b) {
  const int n = static_cast<int>(A.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(A[r][col]) > std::abs(A[pivot][col])) pivot = r;
    if (std::abs(A[pivot][col]) < 1e-12) return std::nullopt;
    std::swap(A[col], A[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = col + 1; r < n; ++r) {
      const double factor = A[r][col] / A[col][col];
      for (int c = col; c < n; ++c) A[r][c] -= factor * A[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= A[r][c] * x[c];
    x[r] = s / A[r][r];
  }
  return x;
}

} // namespace

FeasibilityReport feasibility(const SinrNetwork& net) {
  net.validate();
  FeasibilityReport report;
  report.M.assign(net.n, std::vector<double>(net.n, 0.0));
  report.b.resize(net.n);
  for (int j = 0; j < net.n; ++j) {
    report.b[j] = net.targets[j] * net.noise / net.gains[j][j];
    for (int jp = 0; jp < net.n; ++jp)
      if (jp != j)
        report.M[j][jp] =
            net.targets[j] * net.effective_gain(j, jp) / net.gains[j][j];
  }
  report.rho = spectral_radius(report.M);
  if (report.rho < 1.0) {
    std::vector<std::vector<double>> A(net.n, std::vector<double>(net.n));
    for (int j = 0; j < net.n; ++j)
      for (int jp = 0; jp < net.n; ++jp)
        A[j][jp] = (j == jp ? 1.0 : 0.0) - report.M[j][jp];
    auto solution = solve_linear(A, report.b);
    if (!solution) {
      report.singular = true;
    } else {
      report.a_star = std::move(*solution);
      report.feasible = true;
      for (int j = 0; j < net.n; ++j)
        if (!((*report.a_star)[j] > 0.0 &&
              (*report.a_star)[j] <= net.caps[j]))
          report.feasible = false;
    }
  }
  return report;
}

double satisfaction_update(double own_action, double own_payoff,
                           double own_target, double cap) {
  if (own_payoff == 0.0)
    throw Error(ErrorCode::zero_payoff,
                "realized payoff is zero; update undefined");
  return project_box(own_action * own_target / own_payoff, 0.0, cap);
}

double relaxed_satisfaction_update(double lambda, double own_action,
                                   double own_payoff, double own_target,
                                   double cap) {
  if (own_payoff == 0.0)
    throw Error(ErrorCode::zero_payoff,
                "realized payoff is zero; update undefined");
  return project_box(lambda * own_action * own_target / own_payoff +
                         (1.0 - lambda) * own_action,
                     0.0, cap);
}

bool SatisfyResult::local_only() const {
  for (const auto& rec : reads)
    if (rec.action_index != rec.player || rec.payoff_index != rec.player ||
        rec.target_index != rec.player)
      return false;
  return true;
}

namespace {

SatisfyResult satisfy_run(const SinrNetwork& net, const ProfileOracle& oracle,
                          const std::vector<double>& a0, const Schedule* lam,
                          const StopRule& stop,
                          const SatisfyOptions& options) {
  net.validate();
  if (a0.size() != static_cast<std::size_t>(net.n))
    throw Error(ErrorCode::invalid_inputs, "a0 size mismatch");
  for (int j = 0; j < net.n; ++j)
    if (!(a0[j] > 0.0 && a0[j] <= net.caps[j]))
      throw Error(ErrorCode::invalid_inputs,
                  "starting actions must lie in (0, cap]");

  SatisfyResult result;
  auto& log = result.log;
  std::vector<double> a = a0;

  auto mean = [&](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / v.size();
  };

  for (int t = 0;; ++t) {
    const std::vector<double> r = oracle(a);
    log.actions.push_back(a);
    log.aggregates.push_back(mean(a));
    log.payoffs.push_back(r);

    if (t >= stop.max_iters) {
      log.stop_reason = StopReason::max_iters;
      break;
    }

    double lambda_t = 1.0;
    if (lam) {
      lam->validate_step(t + 1);
      lambda_t = lam->lambda(t + 1);
    }
    std::vector<double> next(a.size());
    for (int j = 0; j < net.n; ++j) {
      // The update consumes exactly the player's own entries.
      const double own_action = a[j];
      const double own_payoff = r[j];
      const double own_target = net.targets[j];
      if (options.record_reads) result.reads.push_back({t, j, j, j, j});
      next[j] = lam ? relaxed_satisfaction_update(lambda_t, own_action,
                                                  own_payoff, own_target,
                                                  net.caps[j])
                    : satisfaction_update(own_action, own_payoff, own_target,
                                          net.caps[j]);
    }

    const double step = distance(Point(a.begin(), a.end()),
                                 Point(next.begin(), next.end()));
    if (step <= stop.tol) {
      bool pinned_unsatisfied = false;
      for (int j = 0; j < net.n; ++j)
        if (next[j] >= net.caps[j] && r[j] < net.targets[j])
          pinned_unsatisfied = true;
      log.stop_reason = pinned_unsatisfied ? StopReason::cap_saturation
                                           : StopReason::residual_below_tol;
      a = std::move(next);
      log.actions.push_back(a);
      log.aggregates.push_back(mean(a));
      log.payoffs.push_back(oracle(a));
      break;
    }
    a = std::move(next);
  }
  return result;
}

} // namespace

SatisfyResult banach_picard_satisfy(const SinrNetwork& net,
                                    const ProfileOracle& oracle,
                                    const std::vector<double>& a0,
                                    const StopRule& stop,
                                    const SatisfyOptions& options) {
  return satisfy_run(net, oracle, a0, nullptr, stop, options);
}

SatisfyResult banach_picard_satisfy(const SinrNetwork& net,
                                    const std::vector<double>& a0,
                                    const StopRule& stop,
                                    const SatisfyOptions& options) {
  ProfileOracle oracle = [&net](const std::vector<double>& a) {
    return sinr(net, a).payoff;
  };
  return satisfy_run(net, oracle, a0, nullptr, stop, options);
}

SatisfyResult reverse_ishikawa_satisfy(const SinrNetwork& net,
                                       const std::vector<double>& a0,
                                       const Schedule& lambda,
                                       const StopRule& stop,
                                       const SatisfyOptions& options) {
  if (lambda.kind != SchemeKind::reverse_ishikawa)
    throw Error(ErrorCode::invalid_schedule,
                "expected a reverse_ishikawa schedule");
  ProfileOracle oracle = [&net](const std::vector<double>& a) {
    return sinr(net, a).payoff;
  };
  return satisfy_run(net, oracle, a0, &lambda, stop, options);
}

void MeanFieldSinr::validate() const {
  if (!(gamma_star > 0.0) || !(n0_bar > 0.0) || !(alpha > 0.0) ||
      !(a_max > 0.0))
    throw Error(ErrorCode::invalid_inputs,
                "mean-field network parameters must be positive");
}

double meanfield_sinr_payoff(const MeanFieldSinr& mf, double m) {
  return m / (mf.n0_bar + mf.alpha * m);
}

IterationMap meanfield_sinr_map(const MeanFieldSinr& mf) {
  mf.validate();
  return make_scalar_map(
      [mf](double m) {
        return project_box(mf.gamma_star * (mf.n0_bar + mf.alpha * m), 0.0,
                           mf.a_max);
      },
      0.0, mf.a_max, {}, "meanfield-sinr");
}

MeanFieldSatisfyResult meanfield_satisfy(const MeanFieldSinr& mf, double m0,
                                         MeanFieldScheme scheme,
                                         const StopRule& stop,
                                         const Schedule* lambda) {
  mf.validate();
  if (m0 < 0.0 || m0 > mf.a_max)
    throw Error(ErrorCode::invalid_inputs, "m0 outside [0, a_max]");

  MeanFieldSatisfyResult result;
  const double load = mf.gamma_star * mf.alpha;
  if (load < 1.0) {
    result.closed_form_valid = true;
    result.m_star = mf.n0_bar * mf.gamma_star / (1.0 - load);
    result.interior = result.m_star <= mf.a_max;
  }

  const IterationMap map = meanfield_sinr_map(mf);
  switch (scheme) {
    case MeanFieldScheme::picard:
      result.traj = fixpoint::iterate(map, Schedule::picard(), m0, stop);
      break;
    case MeanFieldScheme::reverse_ishikawa: {
      const Schedule schedule =
          lambda ? *lambda : Schedule::reverse_ishikawa();
      // Residuals against the per-step blended update, which is what the
      // scheme itself iterates.
      Trajectory traj;
      traj.iterates.push_back({m0});
      double m = m0;
      for (int t = 1;; ++t) {
        schedule.validate_step(t);
        const double l = schedule.lambda(t);
        const double blended =
            project_box(l * map(m) + (1.0 - l) * m, 0.0, mf.a_max);
        ++traj.evaluations;
        traj.residuals.push_back(std::abs(blended - m));
        traj.evaluations_at.push_back(traj.evaluations);
        if (traj.residuals.back() <= stop.tol) {
          traj.stop_reason = StopReason::residual_below_tol;
          break;
        }
        if (static_cast<int>(traj.iterates.size()) - 1 >= stop.max_iters) {
          traj.stop_reason = StopReason::max_iters;
          break;
        }
        traj.iterates.push_back({blended});
        m = blended;
      }
      result.traj = std::move(traj);
      break;
    }
    case MeanFieldScheme::steffensen: {
      auto st = accel::steffensen_iterate(map, m0, stop);
      result.traj = std::move(st.outer);
      result.steffensen_probes = std::move(st.probes);
      break;
    }
  }
  return result;
}

} // namespace mfl::satisfy
