#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mfl/games.hpp"
#include "mfl/schedule.hpp"
#include "mfl/trajectory.hpp"

namespace mfl::satisfy {

/// Interference network. gains[j][j'] = |h_{jj'}|^2; cross_factors[j][j']
/// scales the interference of j' onto j (diagonal entries are ignored).
struct SinrNetwork {
  int n = 0;
  std::vector<std::vector<double>> gains;
  std::vector<std::vector<double>> cross_factors; // defaults to all-ones
  double noise = 1.0;                             // N0 > 0
  std::vector<double> targets;                    // gamma*_j > 0
  std::vector<double> caps;                       // a_{j,max} > 0

  void validate() const;
  double effective_gain(int j, int jp) const;
};

struct SinrReport {
  std::vector<double> payoff;
  std::vector<bool> satisfied;
};

/// payoff_j = a_j w_jj / (N0 + sum_{j' != j} a_{j'} w_{jj'} eps_{jj'});
/// satisfied_j = payoff_j >= target_j (strict threshold: a profile sitting
/// exactly on the satisfaction boundary can read false by a rounding ulp).
SinrReport sinr(const SinrNetwork& net, const std::vector<double>& a);

/// Normalized cross-gain matrix and the satisfaction system (I - M) a = b,
/// oriented so that a solution meets every SINR target exactly:
/// M[j][j'] = target_j * effective_gain(j, j') / w_jj off-diagonal,
/// b_j = target_j * N0 / w_jj.
struct FeasibilityReport {
  std::vector<std::vector<double>> M;
  std::vector<double> b;
  double rho = 0.0;                     // spectral radius of M
  std::optional<std::vector<double>> a_star;
  bool feasible = false; // rho < 1 and 0 < a*_j <= cap_j for all j
  bool singular = false; // (I - M) numerically singular (infeasible by A0)
};

/// rho via power iteration on the nonnegative M (deterministic all-ones
/// start, relative tolerance 1e-12); a_star via direct elimination when
/// rho < 1.
FeasibilityReport feasibility(const SinrNetwork& net);

/// Spectral radius of a nonnegative square matrix (row-major).
double spectral_radius(const std::vector<std::vector<double>>& m);

/// One player's learning step; consumes nothing beyond her own action,
/// realized payoff, target and cap.
double satisfaction_update(double own_action, double own_payoff,
                           double own_target, double cap);
double relaxed_satisfaction_update(double lambda, double own_action,
                                   double own_payoff, double own_target,
                                   double cap);

/// Realized payoffs of a posted action profile (the environment).
using ProfileOracle =
    std::function<std::vector<double>(const std::vector<double>&)>;

/// Which (player, component) pairs each update consumed, per round.
struct AccessRecord {
  int round;
  int player;
  int action_index;
  int payoff_index;
  int target_index;
};

struct SatisfyOptions {
  bool record_reads = false;
};

struct SatisfyResult {
  games::RoundLog log;
  std::vector<AccessRecord> reads;
  /// True when every recorded read was own-indexed.
  bool local_only() const;
};

/// Per-player iteration a_j <- proj[a_j target_j / r_j] against the network
/// SINR oracle. Starts must be strictly positive (a zero action produces a
/// zero payoff and Error(zero_payoff)). Stops when the profile residual
/// d(a_t, a_{t+1}) falls to stop.tol (cap_saturation instead when the
/// stationary profile pins unsatisfied players at their caps) or at
/// stop.max_iters rounds.
SatisfyResult banach_picard_satisfy(const SinrNetwork& net,
                                    const std::vector<double>& a0,
                                    const StopRule& stop,
                                    const SatisfyOptions& options = {});
SatisfyResult banach_picard_satisfy(const SinrNetwork& net,
                                    const ProfileOracle& oracle,
                                    const std::vector<double>& a0,
                                    const StopRule& stop,
                                    const SatisfyOptions& options = {});

/// Over-relaxed variant a_j <- proj[lambda_t a_j target_j / r_j +
/// (1 - lambda_t) a_j], lambda_t in [1, 2); the projection is always applied
/// because the blend is not convex.
SatisfyResult reverse_ishikawa_satisfy(const SinrNetwork& net,
                                       const std::vector<double>& a0,
                                       const Schedule& lambda,
                                       const StopRule& stop,
                                       const SatisfyOptions& options = {});

/// Scaled single-class network: m <- proj[gamma (n0_bar + alpha m)].
struct MeanFieldSinr {
  double gamma_star;
  double n0_bar;
  double alpha;
  double a_max;

  void validate() const;
};

/// Generic-player payoff at the symmetric profile m: m / (n0_bar + alpha m).
double meanfield_sinr_payoff(const MeanFieldSinr& mf, double m);

/// The projected affine response map of the scaled network.
IterationMap meanfield_sinr_map(const MeanFieldSinr& mf);

enum class MeanFieldScheme { picard, reverse_ishikawa, steffensen };

struct MeanFieldSatisfyResult {
  Trajectory traj;
  /// (f(z), f(f(z))) pairs per outer step, steffensen only.
  std::vector<std::pair<double, double>> steffensen_probes;
  bool closed_form_valid = false; // gamma alpha < 1
  double m_star = 0.0;            // n0_bar gamma / (1 - gamma alpha)
  bool interior = false;          // m_star <= a_max
};

/// Trajectory of the chosen scheme on the affine map plus the closed-form
/// solution. Residuals are taken against the scheme's own per-step update
/// (for picard that is the map itself; for the over-relaxed scheme the
/// lambda-blend).
MeanFieldSatisfyResult meanfield_satisfy(const MeanFieldSinr& mf, double m0,
                                         MeanFieldScheme scheme,
                                         const StopRule& stop,
                                         const Schedule* lambda = nullptr);

} // namespace mfl::satisfy
