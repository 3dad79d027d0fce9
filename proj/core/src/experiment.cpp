#include "mfl/experiment.hpp"

#include <cmath>
#include <filesystem>
#include <optional>

#include "mfl/accel.hpp"
#include "mfl/bounds.hpp"
#include "mfl/errors.hpp"
#include "mfl/esc.hpp"
#include "mfl/expr.hpp"
#include "mfl/fixpoint.hpp"
#include "mfl/games.hpp"
#include "mfl/satisfy.hpp"
#include "mfl/schedule.hpp"

namespace mfl::cli {

using nlohmann::json;

namespace {

[[noreturn]] void bad_config(const std::string& what) {
  throw Error(ErrorCode::config_invalid, what);
}

const json& require(const json& obj, const std::string& field) {
  if (!obj.contains(field)) bad_config("missing field '" + field + "'");
  return obj.at(field);
}

double num(const json& obj, const std::string& field) {
  const json& v = require(obj, field);
  if (!v.is_number()) bad_config("field '" + field + "' must be a number");
  return v.get<double>();
}

double num_or(const json& obj, const std::string& field, double fallback) {
  if (!obj.contains(field)) return fallback;
  return num(obj, field);
}

int integer(const json& obj, const std::string& field) {
  const json& v = require(obj, field);
  if (!v.is_number_integer())
    bad_config("field '" + field + "' must be an integer");
  return v.get<int>();
}

int integer_or(const json& obj, const std::string& field, int fallback) {
  if (!obj.contains(field)) return fallback;
  return integer(obj, field);
}

std::string text(const json& obj, const std::string& field) {
  const json& v = require(obj, field);
  if (!v.is_string()) bad_config("field '" + field + "' must be a string");
  return v.get<std::string>();
}

StopRule parse_stop(const json& config) {
  StopRule stop;
  if (config.contains("stop")) {
    const json& s = config.at("stop");
    stop.tol = num_or(s, "tol", stop.tol);
    stop.max_iters = integer_or(s, "max_iters", stop.max_iters);
    if (s.contains("cycle_check")) stop.cycle_check = s.at("cycle_check").get<bool>();
  }
  if (!(stop.tol > 0.0) || stop.max_iters < 1)
    bad_config("stop rule needs tol > 0 and max_iters >= 1");
  return stop;
}

Schedule parse_scheme(const json& config) {
  if (!config.contains("scheme")) return Schedule::picard();
  const json& s = config.at("scheme");
  const std::string kind = text(s, "kind");
  Schedule schedule;
  if (kind == "picard") {
    schedule = Schedule::picard();
  } else if (kind == "mann") {
    schedule = Schedule::mann(num(s, "lambda"));
  } else if (kind == "ishikawa") {
    schedule = Schedule::ishikawa(num(s, "lambda"), num_or(s, "mu", 0.0));
  } else if (kind == "reverse_ishikawa") {
    schedule = s.contains("lambda")
                   ? Schedule::reverse_ishikawa(num(s, "lambda"))
                   : Schedule::reverse_ishikawa();
  } else {
    bad_config("unknown scheme kind '" + kind + "'");
  }
  // Range problems in a declarative config are config errors, not runtime
  // failures inside the run.
  try {
    schedule.validate_step(1);
  } catch (const Error& e) {
    bad_config(e.what());
  }
  return schedule;
}

json trajectory_summary(const Trajectory& traj) {
  json out;
  out["stop_reason"] = to_string(traj.stop_reason);
  out["iterations"] = traj.iterates.size() - 1;
  out["evaluations"] = traj.evaluations;
  out["final"] = traj.final_point();
  out["final_residual"] = traj.final_residual();

  // Convergence order from the longest strictly-decreasing positive
  // residual suffix, when one long enough exists.
  const auto& r = traj.residuals;
  std::size_t begin = r.size();
  for (std::size_t i = r.size(); i-- > 0;) {
    if (!(r[i] > 0.0)) break;
    if (i + 1 < r.size() && !(r[i] > r[i + 1])) break;
    begin = i;
  }
  const std::vector<double> window(r.begin() + begin, r.end());
  if (window.size() >= 4) {
    const auto est = accel::estimate_order(window);
    out["order_estimate"] = {{"o_hat", est.o_hat}, {"c1_hat", est.c1_hat}};
  } else {
    out["order_estimate"] = nullptr;
  }
  return out;
}

RunResult finish_trajectory_run(const std::string& kind,
                                const Trajectory& traj) {
  RunResult result;
  result.tables.emplace_back("trajectory", csv::trajectory_table(traj));
  result.summary = trajectory_summary(traj);
  result.summary["kind"] = kind;
  return result;
}

// ---- solve ----------------------------------------------------------

RunResult run_solve(const json& config) {
  const IterationMap map = parse_map_spec(require(config, "map"));
  const Schedule scheme = parse_scheme(config);
  const StopRule stop = parse_stop(config);
  const double x0 = num(config, "x0");
  const auto traj = fixpoint::iterate(map, scheme, x0, stop);
  RunResult result = finish_trajectory_run("solve", traj);
  if (traj.stop_reason == StopReason::cycle_detected ||
      static_cast<int>(traj.size()) >= 2 * fixpoint::kDefaultCycleMaxPeriod) {
    if (auto cycle = fixpoint::detect_cycle(traj,
                                            fixpoint::kDefaultCycleMaxPeriod,
                                            fixpoint::kDefaultCycleTol)) {
      result.summary["cycle"] = {{"period", cycle->period}};
    } else {
      result.summary["cycle"] = nullptr;
    }
  }
  return result;
}

// ---- accelerate ------------------------------------------------------

accel::RootProblem parse_root_problem(const json& config) {
  accel::RootProblem p;
  if (config.contains("g")) {
    const json& g = config.at("g");
    const auto parsed = expr::parse_expression(text(g, "expr"));
    p.g = [parsed](double x) { return parsed(x); };
    if (g.contains("domain")) {
      p.lo = g.at("domain").at(0).get<double>();
      p.hi = g.at("domain").at(1).get<double>();
    }
    if (g.contains("derivatives")) {
      for (const auto& d : g.at("derivatives")) {
        const auto dp = expr::parse_expression(d.get<std::string>());
        p.derivatives.push_back([dp](double x) { return dp(x); });
      }
    }
  } else if (config.contains("map")) {
    p = accel::root_form(parse_map_spec(config.at("map")));
  } else {
    bad_config("accelerate needs 'g' or 'map'");
  }
  if (config.contains("seed_map")) {
    const IterationMap seed = parse_map_spec(config.at("seed_map"));
    p.associated_map = [seed](double x) { return seed(x); };
  }
  return p;
}

RunResult run_accelerate(const json& config) {
  const std::string method = text(config, "method");
  const StopRule stop = parse_stop(config);

  if (method == "aitken") {
    std::vector<double> seq;
    if (config.contains("sequence")) {
      for (const auto& v : config.at("sequence")) seq.push_back(v.get<double>());
    } else {
      const IterationMap map = parse_map_spec(require(config, "map"));
      const int count = integer_or(config, "count", 5);
      const auto traj = fixpoint::iterate(
          map, Schedule::picard(), num(config, "x0"),
          {.tol = 1e-300, .max_iters = count - 1});
      seq = traj.scalars();
    }
    const auto transformed = accel::aitken_transform(seq);
    RunResult result;
    std::vector<double> index(transformed.size());
    for (std::size_t i = 0; i < index.size(); ++i) index[i] = double(i);
    result.tables.emplace_back("trajectory",
                               csv::xy_table("t", "y", index, transformed));
    result.summary = {{"kind", "accelerate"},
                      {"method", "aitken"},
                      {"input_length", seq.size()},
                      {"final", transformed.back()}};
    return result;
  }

  if (method == "steffensen") {
    const IterationMap map = parse_map_spec(require(config, "map"));
    const auto st = accel::steffensen_iterate(map, num(config, "x0"), stop);
    RunResult result = finish_trajectory_run("accelerate", st.outer);
    result.summary["method"] = "steffensen";
    return result;
  }

  const accel::RootProblem problem = parse_root_problem(config);
  Trajectory traj;
  if (method == "secant") {
    std::optional<double> x1;
    if (config.contains("x1")) x1 = num(config, "x1");
    traj = accel::secant_iterate(problem, num(config, "x0"), x1, stop);
  } else if (method == "newton" || method == "halley" ||
             method == "householder") {
    accel::HouseholderOptions opts;
    opts.order = method == "newton"   ? 1
                 : method == "halley" ? 2
                                      : integer(config, "order");
    opts.multiplicity = num_or(config, "multiplicity", 1.0);
    traj = accel::householder_iterate(problem, opts, num(config, "x0"), stop);
  } else {
    bad_config("unknown accelerate method '" + method + "'");
  }
  RunResult result = finish_trajectory_run("accelerate", traj);
  result.summary["method"] = method;
  return result;
}

// ---- bound -----------------------------------------------------------

RunResult run_bound(const json& config) {
  const std::string which = text(config, "bound");
  RunResult result;
  json& out = result.summary;
  out["kind"] = "bound";
  out["bound"] = which;
  csv::Table table;
  table.header = {"quantity", "value"};

  auto add = [&](const std::string& name, double value) {
    out[name] = value;
  };

  if (which == "contraction") {
    const bounds::ContractionInputs in{num(config, "alpha1"),
                                       num(config, "d0"), num(config, "eta")};
    const auto b = bounds::contraction_time(in);
    add("T", b.T);
    out["T_eta"] = b.T_eta;
  } else if (which == "geometric") {
    const auto b = bounds::geometric_time(num(config, "rho"),
                                          num(config, "d0"),
                                          num(config, "eta"));
    add("T", b.T);
    out["T_eta"] = b.T_eta;
  } else if (which == "nonexpansive") {
    const auto b =
        bounds::nonexpansive_time(num(config, "d0"), num(config, "eta"));
    add("T", b.T);
    out["T_eta"] = b.T_eta;
  } else if (which == "residual") {
    const double lambda = num(config, "lambda");
    const int t = integer(config, "t");
    if (config.contains("diameter"))
      add("bound", bounds::residual_bound_bounded(
                       num(config, "diameter"), [lambda](int) { return lambda; },
                       t));
    else
      add("bound", bounds::residual_bound_unbounded(
                       num(config, "d0"), [lambda](int) { return lambda; }, t));
  } else if (which == "pseudocontractive") {
    const bounds::PseudocontractiveParams p{num(config, "L"),
                                            num(config, "k"),
                                            num_or(config, "s", 0.0)};
    const auto b =
        bounds::pseudocontractive_time(p, num(config, "d0"),
                                       num(config, "eta"));
    add("lambda_star", b.lambda_star);
    add("rho_star", b.rho_star);
    add("T", b.time.T);
    out["T_eta"] = b.time.T_eta;
  } else if (which == "speedup") {
    const bounds::SpeedupInputs in{num(config, "eta0"),
                                   num(config, "eta_star"), num(config, "c2"),
                                   integer(config, "o")};
    const auto b = bounds::speedup_time(in);
    add("T", b.T);
    out["T_eta"] = b.T_eta;
    if (config.contains("t"))
      add("error_bound_at_t", bounds::speedup_error(in, integer(config, "t")));
  } else if (which == "rescaled") {
    const json& s = require(config, "schedule");
    const std::string kind = text(s, "kind");
    bounds::RescaleSchedule schedule;
    if (kind == "constant")
      schedule = bounds::RescaleSchedule::constant_rate(num(s, "value"));
    else if (kind == "exponential")
      schedule = bounds::RescaleSchedule::exponential();
    else if (kind == "expr") {
      const auto parsed = expr::parse_expression(text(s, "expr"));
      schedule = bounds::RescaleSchedule::general(
          [parsed](double t) { return parsed(t); });
    } else {
      bad_config("unknown rescale schedule kind '" + kind + "'");
    }
    add("T_b", bounds::rescaled_time(num(config, "Ta"), schedule));
  } else {
    bad_config("unknown bound '" + which + "'");
  }

  table.header.clear();
  std::vector<double> row;
  for (const auto& [key, value] : out.items()) {
    if (value.is_number()) {
      table.header.push_back(key);
      row.push_back(value.get<double>());
    }
  }
  table.rows.push_back(std::move(row));
  result.tables.emplace_back("bound", std::move(table));
  return result;
}

// ---- game ------------------------------------------------------------

games::AggregativeGame parse_game(const json& spec, int players) {
  const std::string builtin = text(spec, "builtin");
  if (builtin == "resource_sharing")
    return games::resource_sharing_game(
        num_or(spec, "c", 1.0), num_or(spec, "p", 1.0),
        num_or(spec, "eps", 0.0), integer_or(spec, "n_response", players),
        players, num_or(spec, "action_max", 1.0));
  if (builtin == "beauty")
    return games::beauty_game(num(spec, "mu"), num(spec, "p"), num(spec, "M"),
                              players);
  if (builtin == "chi") {
    const auto chi = expr::parse_expression(text(spec, "expr"));
    const double M = num(spec, "M");
    games::AggregativeGame game;
    game.n = players;
    game.action_lo = 0.0;
    game.action_hi = M;
    game.best_response = {[chi, M](double m) {
      return games::chi_response([&chi](double v) { return chi(v); }, M, m);
    }};
    return game;
  }
  bad_config("unknown game builtin '" + builtin + "'");
}

RunResult run_game(const json& config) {
  const int players = integer(config, "players");
  const games::AggregativeGame game =
      parse_game(require(config, "game"), players);
  const Schedule scheme = parse_scheme(config);
  const int rounds = integer(config, "rounds");

  std::vector<double> a0;
  const json& start = require(config, "a0");
  if (start.is_number()) {
    a0.assign(players, start.get<double>());
  } else {
    for (const auto& v : start) a0.push_back(v.get<double>());
  }

  const auto log = games::play_rounds(game, scheme, a0, rounds);

  RunResult result;
  csv::Table table;
  table.header = {"t", "aggregate"};
  for (int j = 0; j < players; ++j)
    table.header.push_back("a" + std::to_string(j));
  for (std::size_t t = 0; t < log.actions.size(); ++t) {
    std::vector<double> row{static_cast<double>(t), log.aggregates[t]};
    row.insert(row.end(), log.actions[t].begin(), log.actions[t].end());
    table.rows.push_back(std::move(row));
  }
  result.tables.emplace_back("rounds", std::move(table));
  result.summary = {{"kind", "game"},
                    {"players", players},
                    {"rounds", rounds},
                    {"final_aggregate", log.aggregates.back()}};

  const json& spec = config.at("game");
  if (text(spec, "builtin") == "beauty") {
    const auto eq = games::beauty_equilibrium(num(spec, "mu"), num(spec, "p"),
                                              num(spec, "M"));
    json eq_json;
    eq_json["kind"] = eq.kind == games::BeautyEquilibrium::Kind::interior
                          ? "interior"
                      : eq.kind == games::BeautyEquilibrium::Kind::boundary
                          ? "boundary"
                          : "every_point";
    if (eq.value) eq_json["value"] = *eq.value;
    result.summary["equilibrium"] = eq_json;
  }
  return result;
}

// ---- esc -------------------------------------------------------------

RunResult run_esc(const json& config) {
  const int order = integer_or(config, "order", 1);
  const auto payoff =
      expr::parse_expression(text(require(config, "payoff"), "expr"));
  esc::PayoffOracle oracle = [payoff](const std::vector<double>& a) {
    std::vector<double> r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = payoff(a[j]);
    return r;
  };

  esc::EscParams params = esc::uniform_params(
      1, num_or(config, "k", 1.0), num_or(config, "eps", 0.1),
      num_or(config, "lambda", 0.05), num_or(config, "w", 1.0),
      num_or(config, "phi", 0.0));
  params.washout = num_or(config, "wc", 0.5);
  params.noise.half_width = num_or(config, "noise_half_width", 0.0);
  params.seed = static_cast<std::uint64_t>(integer_or(config, "seed", 0));

  const int steps = integer(config, "steps");
  const std::vector<double> a0{num(config, "a0")};

  esc::EscRun run;
  if (order == 1) {
    run = esc::first_order(oracle, params, a0, steps);
  } else if (order == 2) {
    run = esc::second_order(oracle, params, a0,
                            {num_or(config, "d0", 1.0)}, steps);
  } else {
    bad_config("esc order must be 1 or 2");
  }

  RunResult result;
  csv::Table table;
  table.header = {"t", "a_hat", "a", "r"};
  if (order == 2) table.header.push_back("d_hat");
  for (int t = 0; t < steps; ++t) {
    std::vector<double> row{static_cast<double>(t + 1), run.a_hat[t][0],
                            run.a[t][0], run.r[t][0]};
    if (order == 2) row.push_back(run.d_hat[t][0]);
    table.rows.push_back(std::move(row));
  }
  result.tables.emplace_back("esc", std::move(table));

  const int tail = std::max(1, steps / 5);
  double avg = 0.0;
  for (int t = steps - tail; t < steps; ++t) avg += run.a_hat[t][0];
  avg /= tail;
  result.summary = {{"kind", "esc"},
                    {"order", order},
                    {"steps", steps},
                    {"tail_average", avg},
                    {"d_hat_diverged", run.d_hat_diverged}};
  return result;
}

// ---- satisfy ---------------------------------------------------------

satisfy::SinrNetwork parse_network(const json& spec) {
  satisfy::SinrNetwork net;
  const json& gains = require(spec, "gains");
  for (const auto& row : gains) {
    net.gains.emplace_back();
    for (const auto& v : row) net.gains.back().push_back(v.get<double>());
  }
  net.n = static_cast<int>(net.gains.size());
  if (spec.contains("cross_factors")) {
    for (const auto& row : spec.at("cross_factors")) {
      net.cross_factors.emplace_back();
      for (const auto& v : row)
        net.cross_factors.back().push_back(v.get<double>());
    }
  }
  net.noise = num(spec, "noise");
  for (const auto& v : require(spec, "targets")) net.targets.push_back(v.get<double>());
  for (const auto& v : require(spec, "caps")) net.caps.push_back(v.get<double>());
  net.validate();
  return net;
}

RunResult run_satisfy(const json& config) {
  const StopRule stop = parse_stop(config);
  RunResult result;

  if (config.contains("meanfield")) {
    const json& mfj = config.at("meanfield");
    const satisfy::MeanFieldSinr mf{num(mfj, "gamma"), num(mfj, "n0"),
                                    num(mfj, "alpha"), num(mfj, "amax")};
    const std::string scheme = text(config, "scheme");
    satisfy::MeanFieldScheme s;
    std::optional<Schedule> lambda;
    if (scheme == "picard") {
      s = satisfy::MeanFieldScheme::picard;
    } else if (scheme == "reverse_ishikawa") {
      s = satisfy::MeanFieldScheme::reverse_ishikawa;
      if (config.contains("lambda"))
        lambda = Schedule::reverse_ishikawa(num(config, "lambda"));
    } else if (scheme == "steffensen") {
      s = satisfy::MeanFieldScheme::steffensen;
    } else {
      bad_config("unknown satisfy scheme '" + scheme + "'");
    }
    const auto run = satisfy::meanfield_satisfy(
        mf, num(config, "m0"), s, stop, lambda ? &*lambda : nullptr);
    result = finish_trajectory_run("satisfy", run.traj);
    result.summary["scheme"] = scheme;
    result.summary["closed_form_valid"] = run.closed_form_valid;
    if (run.closed_form_valid) {
      result.summary["m_star"] = run.m_star;
      result.summary["interior"] = run.interior;
      const double rho = mf.gamma_star * mf.alpha;
      result.summary["rho"] = rho;
      const double d0 = std::abs(num(config, "m0") - run.m_star);
      if (d0 > 0.0 && stop.tol > 0.0 && stop.tol < d0)
        result.summary["planned_T_eta"] =
            bounds::geometric_time(rho, d0, stop.tol).T_eta;
    }
    return result;
  }

  const satisfy::SinrNetwork net = parse_network(require(config, "network"));
  std::vector<double> a0;
  for (const auto& v : require(config, "a0")) a0.push_back(v.get<double>());

  const std::string scheme =
      config.contains("scheme") ? text(config, "scheme") : "banach_picard";
  satisfy::SatisfyResult run;
  if (scheme == "banach_picard") {
    run = satisfy::banach_picard_satisfy(net, a0, stop);
  } else if (scheme == "reverse_ishikawa") {
    const Schedule lambda =
        config.contains("lambda")
            ? Schedule::reverse_ishikawa(num(config, "lambda"))
            : Schedule::reverse_ishikawa();
    run = satisfy::reverse_ishikawa_satisfy(net, a0, lambda, stop);
  } else {
    bad_config("unknown satisfy scheme '" + scheme + "'");
  }

  csv::Table table;
  table.header = {"t", "aggregate"};
  for (int j = 0; j < net.n; ++j)
    table.header.push_back("a" + std::to_string(j));
  for (std::size_t t = 0; t < run.log.actions.size(); ++t) {
    std::vector<double> row{static_cast<double>(t), run.log.aggregates[t]};
    row.insert(row.end(), run.log.actions[t].begin(),
               run.log.actions[t].end());
    table.rows.push_back(std::move(row));
  }
  result.tables.emplace_back("rounds", std::move(table));

  const auto report = satisfy::feasibility(net);
  const auto final_sinr = satisfy::sinr(net, run.log.actions.back());
  result.summary = {{"kind", "satisfy"},
                    {"scheme", scheme},
                    {"stop_reason", to_string(run.log.stop_reason)},
                    {"rounds", run.log.actions.size() - 1},
                    {"final", run.log.actions.back()},
                    {"final_payoff", final_sinr.payoff},
                    {"satisfied", final_sinr.satisfied},
                    {"rho", report.rho},
                    {"feasible", report.feasible}};
  if (report.a_star) result.summary["a_star"] = *report.a_star;
  return result;
}

// ---- reproduce -------------------------------------------------------

RunResult run_reproduce(const json& config) {
  const std::string target = text(config, "target");
  FigtimeParams figtime;
  if (config.contains("figtime")) {
    const json& f = config.at("figtime");
    figtime.eta0 = num_or(f, "eta0", figtime.eta0);
    figtime.c2 = num_or(f, "c2", figtime.c2);
    figtime.o = integer_or(f, "o", figtime.o);
    figtime.eta_star_min = num_or(f, "eta_star_min", figtime.eta_star_min);
    figtime.eta_star_max = num_or(f, "eta_star_max", figtime.eta_star_max);
    figtime.points = integer_or(f, "points", figtime.points);
  }
  const auto outcome = reproduce(target, figtime);
  RunResult result;
  result.tables.emplace_back(outcome.name, outcome.table);
  result.summary = {{"kind", "reproduce"},
                    {"target", outcome.name},
                    {"compared", outcome.compared},
                    {"matched", outcome.matched},
                    {"mismatches", outcome.mismatches}};
  if (outcome.compared && !outcome.matched)
    result.exit_code = kExitGoldenMismatch;
  return result;
}

} // namespace

IterationMap parse_map_spec(const json& spec) {
  if (spec.contains("expr")) {
    const auto parsed = expr::parse_expression(text(spec, "expr"));
    double lo = -kInf, hi = kInf;
    if (spec.contains("domain")) {
      lo = spec.at("domain").at(0).get<double>();
      hi = spec.at("domain").at(1).get<double>();
    }
    return make_scalar_map([parsed](double x) { return parsed(x); }, lo, hi,
                           {}, spec.value("name", parsed.source));
  }
  const std::string builtin = text(spec, "builtin");
  if (builtin == "resource_sharing") {
    const double c = num_or(spec, "c", 1.0);
    const double p = num_or(spec, "p", 1.0);
    const double eps = num_or(spec, "eps", 0.0);
    const int n = integer_or(spec, "n", 10);
    return make_scalar_map(
        [c, p, eps, n](double a) {
          return games::resource_sharing_response(c, p, eps, n, a);
        },
        0.0, num_or(spec, "action_max", 1.0), {}, "resource_sharing");
  }
  if (builtin == "beauty") {
    const double mu = num(spec, "mu");
    const double p = num(spec, "p");
    const double M = num(spec, "M");
    return make_scalar_map(
        [mu, p, M](double m) {
          return games::beauty_contest_response(mu, p, M, m);
        },
        0.0, M, {}, "beauty");
  }
  if (builtin == "chi_sqrt")
    return make_scalar_map([](double m) { return std::sqrt(3.0 + 2.0 * m); },
                           0.0, 100.0, {}, "chi_sqrt");
  if (builtin == "meanfield_sinr") {
    const satisfy::MeanFieldSinr mf{num(spec, "gamma"), num(spec, "n0"),
                                    num(spec, "alpha"), num(spec, "amax")};
    return satisfy::meanfield_sinr_map(mf);
  }
  bad_config("unknown map builtin '" + builtin + "'");
}

RunResult run_config(const json& config) {
  if (!config.is_object()) bad_config("config must be a JSON object");
  const std::string kind = text(config, "kind");
  if (kind == "solve") return run_solve(config);
  if (kind == "accelerate") return run_accelerate(config);
  if (kind == "bound") return run_bound(config);
  if (kind == "game") return run_game(config);
  if (kind == "esc") return run_esc(config);
  if (kind == "satisfy") return run_satisfy(config);
  if (kind == "reproduce") return run_reproduce(config);
  bad_config("unknown kind '" + kind + "'");
}

void write_outputs(const RunResult& result, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (const auto& [name, table] : result.tables)
    csv::write_file(out_dir + "/" + name + ".csv", table.to_string());
  csv::write_file(out_dir + "/summary.json", result.summary.dump(2) + "\n");
}

} // namespace mfl::cli
