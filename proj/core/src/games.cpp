#include "mfl/games.hpp"

#include <algorithm>
#include <cmath>

#include "mfl/accel.hpp"
#include "mfl/errors.hpp"

namespace mfl::games {

const std::function<double(double)>& AggregativeGame::response_of(int j) const {
  if (best_response.size() == 1) return best_response[0];
  return best_response.at(static_cast<std::size_t>(j));
}

double others_mean(double m_bar, double a_j, int n) {
  if (n < 2) throw Error(ErrorCode::invalid_inputs, "need n >= 2");
  return (n * m_bar - a_j) / (n - 1.0);
}

namespace {

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

void check_action(const AggregativeGame& game, double a) {
  if (a < game.action_lo || a > game.action_hi || !std::isfinite(a))
    throw Error(ErrorCode::domain_violation,
                "best response left the action box (mis-specified game)");
}

} // namespace

RoundLog play_rounds(const AggregativeGame& game,
                     const std::vector<Schedule>& schedules,
                     const std::vector<double>& a0, int rounds) {
  if (static_cast<int>(a0.size()) != game.n)
    throw Error(ErrorCode::invalid_inputs, "a0 size != player count");
  if (static_cast<int>(schedules.size()) != game.n)
    throw Error(ErrorCode::invalid_inputs, "schedules size != player count");
  for (const auto& s : schedules)
    if (s.kind == SchemeKind::reverse_ishikawa)
      throw Error(ErrorCode::invalid_schedule,
                  "round play supports picard, mann and ishikawa only");
  for (double a : a0) check_action(game, a);

  RoundLog log;
  const bool with_payoff = game.payoff.has_value();
  std::vector<double> actions = a0;

  auto record = [&](const std::vector<double>& a) {
    log.actions.push_back(a);
    log.aggregates.push_back(mean(a));
    if (with_payoff) {
      std::vector<double> r(a.size());
      const double m_bar = log.aggregates.back();
      for (int j = 0; j < game.n; ++j)
        r[j] = (*game.payoff)(a[j], others_mean(m_bar, a[j], game.n));
      log.payoffs.push_back(std::move(r));
    }
  };
  record(actions);

  for (int t = 1; t <= rounds; ++t) {
    const double m_bar = mean(actions);
    std::vector<double> next(actions.size());
    for (int j = 0; j < game.n; ++j) {
      const auto& schedule = schedules[j];
      schedule.validate_step(t);
      const double lambda = schedule.lambda(t);
      const double mu = schedule.mu ? schedule.mu(t) : 0.0;
      const double m_tilde = others_mean(m_bar, actions[j], game.n);
      const auto& f = game.response_of(j);
      double updated;
      switch (schedule.kind) {
        case SchemeKind::picard:
          updated = f(m_tilde);
          check_action(game, updated);
          break;
        case SchemeKind::mann: {
          const double fr = f(m_tilde);
          check_action(game, fr);
          updated = lambda * fr + (1.0 - lambda) * actions[j];
          break;
        }
        case SchemeKind::ishikawa: {
          const double fr = f(m_tilde);
          check_action(game, fr);
          const double y = mu * fr + (1.0 - mu) * actions[j];
          const double fy = f(y);
          check_action(game, fy);
          updated = lambda * fy + (1.0 - lambda) * actions[j];
          break;
        }
        default:
          updated = actions[j];
          break;
      }
      next[j] = updated;
    }
    actions = std::move(next);
    record(actions);
  }
  log.stop_reason = StopReason::max_iters;
  return log;
}

RoundLog play_rounds(const AggregativeGame& game, const Schedule& schedule,
                     const std::vector<double>& a0, int rounds) {
  return play_rounds(game, std::vector<Schedule>(game.n, schedule), a0,
                     rounds);
}

double resource_sharing_response(double c, double p, double eps, int n,
                                 double m_tilde) {
  const double load = eps + (n - 1.0) * m_tilde;
  return std::max(0.0, std::sqrt(c / p * load) - load);
}

double resource_sharing_payoff(double c, double p, double eps, int n,
                               double a, double m_tilde) {
  return c * a / (eps + a + (n - 1.0) * m_tilde) - p * a;
}

AggregativeGame resource_sharing_game(double c, double p, double eps,
                                      int n_response, int n_players,
                                      double action_hi) {
  AggregativeGame game;
  game.n = n_players;
  game.action_lo = 0.0;
  game.action_hi = action_hi;
  game.best_response = {[c, p, eps, n_response](double m_tilde) {
    return resource_sharing_response(c, p, eps, n_response, m_tilde);
  }};
  game.payoff = [c, p, eps, n_response](double a, double m_tilde) {
    return resource_sharing_payoff(c, p, eps, n_response, a, m_tilde);
  };
  return game;
}

MeanFieldGame resource_sharing_meanfield(double c, double p, double eps,
                                         int n_response, double action_hi) {
  MeanFieldGame game;
  game.response = make_scalar_map(
      [c, p, eps, n_response](double m) {
        return resource_sharing_response(c, p, eps, n_response, m);
      },
      0.0, action_hi, {}, "resource-sharing-meanfield");
  game.payoff = [c, p, eps, n_response](double a, double m) {
    return resource_sharing_payoff(c, p, eps, n_response, a, m);
  };
  return game;
}

double beauty_contest_response(double mu, double p, double M, double m_bar) {
  return project_box(mu + p * m_bar, 0.0, M);
}

BeautyEquilibrium beauty_equilibrium(double mu, double p, double M) {
  if (!(M > 0.0) || mu < 0.0)
    throw Error(ErrorCode::invalid_inputs, "need M > 0, mu >= 0");
  BeautyEquilibrium eq;
  if (p == 1.0) {
    eq.kind = BeautyEquilibrium::Kind::every_point;
    eq.value.reset();
    return eq;
  }
  if (p > 1.0) {
    eq.kind = BeautyEquilibrium::Kind::boundary;
    eq.value = M;
    return eq;
  }
  const double interior = mu / (1.0 - p);
  if (interior <= M) {
    eq.kind = BeautyEquilibrium::Kind::interior;
    eq.value = interior;
  } else {
    eq.kind = BeautyEquilibrium::Kind::boundary;
    eq.value = M;
  }
  return eq;
}

AggregativeGame beauty_game(double mu, double p, double M, int n_players) {
  AggregativeGame game;
  game.n = n_players;
  game.action_lo = 0.0;
  game.action_hi = M;
  game.best_response = {[mu, p, M](double m) {
    return beauty_contest_response(mu, p, M, m);
  }};
  return game;
}

double chi_response(const std::function<double(double)>& chi, double M,
                    double m_bar) {
  return project_box(chi(m_bar), 0.0, M);
}

IterationMap chi_map(std::function<double(double)> chi, double M) {
  return make_scalar_map(
      [chi = std::move(chi), M](double m) { return chi_response(chi, M, m); },
      0.0, M, {}, "chi");
}

std::function<double(double)> social_objective(
    std::function<double(double)> h, double price) {
  return [h = std::move(h), price](double z) { return z * h(z) - price * z; };
}

namespace {

double golden_maximize(const std::function<double(double)>& phi, double lo,
                       double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = phi(c), fd = phi(d);
  while (b - a > 1e-10 * std::max(1.0, hi - lo)) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = phi(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = phi(d);
    }
  }
  return 0.5 * (a + b);
}

} // namespace

SocialOptimum social_optimize(const std::function<double(double)>& h,
                              double price, double lo, double hi,
                              const StopRule& stop) {
  if (!(lo < hi))
    throw Error(ErrorCode::invalid_inputs, "empty optimization interval");
  const auto phi = social_objective(h, price);

  SocialOptimum out;
  // Flat objective: nothing to optimize, report the degenerate case.
  double vmin = kInf, vmax = -kInf;
  for (int i = 0; i <= 8; ++i) {
    const double v = phi(lo + (hi - lo) * i / 8.0);
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  if (vmax - vmin <= 1e-12 * std::max(1.0, std::abs(vmax))) {
    out.z = 0.5 * (lo + hi);
    out.value = phi(out.z);
    out.degenerate = true;
    return out;
  }

  const double fd = 1e-6 * std::max(1.0, hi - lo);
  accel::RootProblem stationarity;
  stationarity.g = [phi, fd](double z) {
    return (phi(z + fd) - phi(z - fd)) / (2.0 * fd);
  };
  stationarity.derivatives = {[phi, fd](double z) {
    return (phi(z + fd) - 2.0 * phi(z) + phi(z - fd)) / (fd * fd);
  }};
  stationarity.lo = lo;
  stationarity.hi = hi;

  bool newton_ok = false;
  double z = 0.5 * (lo + hi);
  try {
    auto traj = accel::householder_iterate(stationarity, {.order = 1}, z,
                                           stop);
    if (traj.stop_reason == StopReason::residual_below_tol) {
      z = traj.final_scalar();
      // Accept only a local maximum.
      const double step = 1e-4 * (hi - lo);
      const double here = phi(z);
      if (here + 1e-12 >= phi(std::min(hi, z + step)) &&
          here + 1e-12 >= phi(std::max(lo, z - step)))
        newton_ok = true;
    }
  } catch (const Error&) {
    newton_ok = false;
  }
  if (!newton_ok) {
    z = golden_maximize(phi, lo, hi);
    out.used_fallback = true;
  }
  out.z = z;
  out.value = phi(z);

  const double best_end = std::max(phi(lo), phi(hi));
  if (best_end > out.value && !out.used_fallback) {
    // Interior step missed a boundary maximum.
    out.z = phi(lo) >= phi(hi) ? lo : hi;
    out.value = phi(out.z);
  }
  if (!std::isfinite(out.value))
    throw Error(ErrorCode::no_critical_point, "objective not evaluable");
  return out;
}

} // namespace mfl::games
