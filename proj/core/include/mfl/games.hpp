#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mfl/iteration_map.hpp"
#include "mfl/schedule.hpp"
#include "mfl/trajectory.hpp"

namespace mfl::games {

/// n-player game with scalar actions in [action_lo, action_hi] where each
/// player best-responds to the mean of the others' actions. best_response
/// holds one map per player (or a single shared map). payoff(a_j, m_tilde),
/// when present, is recorded in round logs.
struct AggregativeGame {
  int n = 2;
  double action_lo = 0.0;
  double action_hi = 1.0;
  std::vector<std::function<double(double)>> best_response;
  std::optional<std::function<double(double, double)>> payoff;

  const std::function<double(double)>& response_of(int j) const;
};

/// Continuum limit: one response map of the population mean.
struct MeanFieldGame {
  IterationMap response;
  std::optional<std::function<double(double, double)>> payoff;
};

struct RoundLog {
  std::vector<std::vector<double>> actions; // [round][player]
  std::vector<double> aggregates;           // mean action per round
  std::vector<std::vector<double>> payoffs; // empty when no payoff given
  StopReason stop_reason = StopReason::max_iters;
};

/// Mean of the others' actions recovered from the aggregate:
/// (n m_bar - a_j) / (n - 1).
double others_mean(double m_bar, double a_j, int n);

/// Simultaneous rounds: every player reads the same aggregate, recovers her
/// others-mean, and applies her scheme step. Schedule kinds picard, mann and
/// ishikawa are accepted; per-player schedules via the second overload.
/// A best response leaving the action box throws Error(domain_violation).
RoundLog play_rounds(const AggregativeGame& game, const Schedule& schedule,
                     const std::vector<double>& a0, int rounds);
RoundLog play_rounds(const AggregativeGame& game,
                     const std::vector<Schedule>& schedules,
                     const std::vector<double>& a0, int rounds);

/// [sqrt((c/p)(eps + S)) - (eps + S)]_+ with S = (n-1) m_tilde.
double resource_sharing_response(double c, double p, double eps, int n,
                                 double m_tilde);

/// Payoff of demanding a against others' mean m_tilde in the same game.
double resource_sharing_payoff(double c, double p, double eps, int n,
                               double a, double m_tilde);

AggregativeGame resource_sharing_game(double c, double p, double eps,
                                      int n_response, int n_players,
                                      double action_hi);

/// Continuum counterpart: one response map of the population mean, with the
/// same interference factor n_response - 1.
MeanFieldGame resource_sharing_meanfield(double c, double p, double eps,
                                         int n_response, double action_hi);

/// clamp(mu + p m_bar, [0, M]).
double beauty_contest_response(double mu, double p, double M, double m_bar);

struct BeautyEquilibrium {
  enum class Kind { interior, boundary, every_point } kind;
  std::optional<double> value; // empty when every profile is an equilibrium
};

/// mu/(1-p) clamped to [0, M] for p < 1 (flagged boundary when the clamp
/// binds), M for p > 1, and every feasible point for p = 1.
BeautyEquilibrium beauty_equilibrium(double mu, double p, double M);

AggregativeGame beauty_game(double mu, double p, double M, int n_players);

/// clamp(chi(m_bar), [0, M]).
double chi_response(const std::function<double(double)>& chi, double M,
                    double m_bar);

IterationMap chi_map(std::function<double(double)> chi, double M);

/// z -> z h(z) - p z.
std::function<double(double)> social_objective(
    std::function<double(double)> h, double price);

struct SocialOptimum {
  double z = 0.0;
  double value = 0.0;
  bool degenerate = false;    // objective is flat on the interval
  bool used_fallback = false; // golden-section instead of the root step
};

/// Maximizes z h(z) - p z on [lo, hi]: a derivative root step first (finite
/// differences when h' is unavailable), golden-section search when that
/// exits the interval or lands on a non-maximum.
SocialOptimum social_optimize(const std::function<double(double)>& h,
                              double price, double lo, double hi,
                              const StopRule& stop);

} // namespace mfl::games
