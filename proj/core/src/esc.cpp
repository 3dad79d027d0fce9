#include "mfl/esc.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "mfl/errors.hpp"

namespace mfl::esc {

EscParams uniform_params(int n, double k, double eps, double lambda, double w,
                         double phi) {
  EscParams p;
  p.gain.assign(n, k);
  p.amplitude.assign(n, eps);
  p.frequency.resize(n);
  for (int j = 0; j < n; ++j)
    p.frequency[j] = w > 0.0 ? w : 1.0 + (j + 1.0) / (n + 1.0);
  if (w > 0.0 && n > 1) {
    // A shared base frequency still needs to be de-conflicted.
    for (int j = 0; j < n; ++j) p.frequency[j] = w * (1.0 + j / (n + 1.0));
  }
  p.phase.assign(n, phi);
  p.step = [lambda](int, int) { return lambda; };
  return p;
}

namespace {

void validate(const EscParams& params, std::size_t n0_size, int steps) {
  const int n = params.players();
  if (n < 1 || static_cast<int>(n0_size) != n ||
      params.amplitude.size() != static_cast<std::size_t>(n) ||
      params.frequency.size() != static_cast<std::size_t>(n) ||
      params.phase.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::invalid_inputs, "inconsistent parameter sizes");
  if (steps < 1) throw Error(ErrorCode::invalid_inputs, "steps must be >= 1");
  if (!params.step) throw Error(ErrorCode::invalid_inputs, "missing step schedule");
  for (int j = 0; j < n; ++j) {
    if (!(params.gain[j] >= 0.0))
      throw Error(ErrorCode::invalid_inputs, "gains must be nonnegative");
    if (!(params.amplitude[j] > 0.0))
      throw Error(ErrorCode::invalid_inputs, "amplitudes must be positive");
    if (!(params.frequency[j] > 0.0))
      throw Error(ErrorCode::invalid_inputs, "frequencies must be positive");
    for (int i = 0; i < j; ++i)
      if (params.frequency[i] == params.frequency[j])
        throw Error(ErrorCode::invalid_inputs,
                    "players " + std::to_string(i) + " and " +
                        std::to_string(j) + " share a probe frequency");
  }
}

std::vector<double> observe(const PayoffOracle& oracle,
                            const std::vector<double>& actions,
                            const NoiseSpec& noise, std::mt19937_64& rng) {
  std::vector<double> r;
  try {
    r = oracle(actions);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::oracle_failure, e.what());
  }
  if (r.size() != actions.size())
    throw Error(ErrorCode::oracle_failure, "payoff vector size mismatch");
  if (noise.half_width > 0.0) {
    std::uniform_real_distribution<double> dist(-noise.half_width,
                                                noise.half_width);
    for (double& v : r) v += dist(rng);
  }
  return r;
}

EscRun run_impl(const PayoffOracle& oracle, const EscParams& params,
                const std::vector<double>& a_hat0,
                const std::vector<double>* d_hat0, int steps) {
  validate(params, a_hat0.size(), steps);
  const int n = params.players();
  const bool second = d_hat0 != nullptr;

  EscRun run;
  std::mt19937_64 rng(params.seed);
  std::vector<double> a_hat = a_hat0;
  std::vector<double> t_hat(n, 0.0);
  std::vector<double> d_hat = second ? *d_hat0 : std::vector<double>();

  auto default_probe = [&](int j, double th) {
    const double s = std::sin(params.frequency[j] * th + params.phase[j]);
    return (s * s - 1.0) / (params.amplitude[j] * params.amplitude[j]);
  };

  for (int t = 1; t <= steps; ++t) {
    std::vector<double> lambda(n), probe_sin(n), actions(n);
    for (int j = 0; j < n; ++j) {
      lambda[j] = params.step(j, t);
      t_hat[j] += lambda[j];
      probe_sin[j] =
          std::sin(params.frequency[j] * t_hat[j] + params.phase[j]);
      actions[j] = a_hat[j] + params.amplitude[j] * probe_sin[j];
    }
    const std::vector<double> r = observe(oracle, actions, params.noise, rng);

    run.a_hat.push_back(a_hat);
    run.t_hat.push_back(t_hat);
    run.a.push_back(actions);
    run.r.push_back(r);
    if (second) run.d_hat.push_back(d_hat);

    for (int j = 0; j < n; ++j) {
      if (!second) {
        a_hat[j] += lambda[j] * params.gain[j] * r[j] * params.amplitude[j] *
                    probe_sin[j];
      } else {
        a_hat[j] += lambda[j] * params.gain[j] * d_hat[j] * r[j] *
                    (2.0 / params.amplitude[j]) * probe_sin[j];
        const double s2 = params.probe ? params.probe(j, t_hat[j])
                                       : default_probe(j, t_hat[j]);
        d_hat[j] = (1.0 + lambda[j] * params.washout) * d_hat[j] +
                   lambda[j] * (-params.washout * d_hat[j] * s2 * r[j] *
                                d_hat[j]);
        if (std::abs(d_hat[j]) > 1e6) run.d_hat_diverged = true;
      }
    }
  }
  return run;
}

} // namespace

EscRun first_order(const PayoffOracle& oracle, const EscParams& params,
                   const std::vector<double>& a_hat0, int steps) {
  return run_impl(oracle, params, a_hat0, nullptr, steps);
}

EscRun second_order(const PayoffOracle& oracle, const EscParams& params,
                    const std::vector<double>& a_hat0,
                    const std::vector<double>& d_hat0, int steps) {
  if (d_hat0.size() != a_hat0.size())
    throw Error(ErrorCode::invalid_inputs, "d_hat0 size mismatch");
  for (double d : d_hat0)
    if (d == 0.0 || !std::isfinite(d))
      throw Error(ErrorCode::invalid_inputs,
                  "d_hat0 must be finite and nonzero");
  return run_impl(oracle, params, a_hat0, &d_hat0, steps);
}

} // namespace mfl::esc
