#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace mfl::esc {

/// Realized payoffs for a played action profile. Only numerical values flow
/// back to the learners; no structural access to the payoff functions.
using PayoffOracle =
    std::function<std::vector<double>(const std::vector<double>&)>;

/// Optional additive measurement noise, uniform on [-half_width, half_width].
struct NoiseSpec {
  double half_width = 0.0;
};

struct EscParams {
  std::vector<double> gain;      // k_j > 0
  std::vector<double> amplitude; // eps_j > 0
  std::vector<double> frequency; // w_j > 0, pairwise distinct
  std::vector<double> phase;     // phi_j
  std::function<double(int, int)> step; // lambda(j, t), t 1-based, in (0, 1]
  double washout = 0.5;                 // w_c (second order)
  /// Demodulation probe s2(j, t_hat). Defaults to
  /// (1/eps_j^2)(sin^2(w_j t_hat + phi_j) - 1).
  std::function<double(int, double)> probe;
  NoiseSpec noise;
  std::uint64_t seed = 0;

  int players() const { return static_cast<int>(gain.size()); }
};

/// Homogeneous parameter set; frequencies default to w_j = 1 + j/(n+1) so
/// that no two players share a probe frequency.
EscParams uniform_params(int n, double k, double eps, double lambda,
                         double w = 0.0, double phi = 0.0);

/// Row t (1-based step) holds the state used to play step t, so
/// a[t][j] = a_hat[t][j] + eps_j sin(w_j t_hat[t][j] + phi_j) exactly and
/// t_hat[t][j] = sum_{t' <= t} lambda(j, t').
struct EscRun {
  std::vector<std::vector<double>> a_hat;
  std::vector<std::vector<double>> t_hat;
  std::vector<std::vector<double>> a;
  std::vector<std::vector<double>> r;
  std::vector<std::vector<double>> d_hat; // second order only
  bool d_hat_diverged = false; // |d_hat| exceeded 1e6 at some step (flagged,
                               // not fatal: no stability region is known)
};

/// Zero-order-hold learning from payoff measurements alone:
///   a_hat <- a_hat + lambda k r eps sin(w t_hat + phi).
EscRun first_order(const PayoffOracle& oracle, const EscParams& params,
                   const std::vector<double>& a_hat0, int steps);

/// Adds the inverse-curvature estimate d_hat:
///   a_hat <- a_hat + lambda k d_hat r (2/eps) sin(w t_hat + phi)
///   d_hat <- (1 + lambda w_c) d_hat + lambda [ -w_c d_hat s2 r d_hat ].
EscRun second_order(const PayoffOracle& oracle, const EscParams& params,
                    const std::vector<double>& a_hat0,
                    const std::vector<double>& d_hat0, int steps);

} // namespace mfl::esc
