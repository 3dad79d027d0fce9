#include "mfl/reproduce.hpp"

#include <cmath>
#include <limits>

#include "mfl/accel.hpp"
#include "mfl/bounds.hpp"
#include "mfl/errors.hpp"
#include "mfl/fixpoint.hpp"
#include "mfl/goldens.hpp"
#include "mfl/satisfy.hpp"

namespace mfl::cli {

namespace presets {

double chi_sqrt(double m) { return std::sqrt(3.0 + 2.0 * m); }

double resource_sharing10(double a) {
  const double s = 9.0 * a;
  return std::max(0.0, std::sqrt(s) - s);
}

} // namespace presets

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool matches(double computed, double golden, int decimals) {
  return std::abs(computed - golden) < std::pow(10.0, -decimals);
}

void compare_cell(ReproduceOutcome& out, const std::string& where,
                  double computed, double golden, int decimals) {
  out.compared = true;
  if (!matches(computed, golden, decimals)) {
    out.matched = false;
    out.mismatches.push_back(where + ": got " + csv::format_double(computed) +
                             ", want " + csv::format_double(golden) +
                             " within 1e-" + std::to_string(decimals));
  }
}

IterationMap chi_sqrt_map() {
  return make_scalar_map(presets::chi_sqrt, 0.0, 100.0,
                         {[](double m) { return 1.0 / std::sqrt(3.0 + 2.0 * m); }},
                         "chi-sqrt");
}

IterationMap resource_map() {
  return make_scalar_map(presets::resource_sharing10, 0.0, 1.0, {},
                         "resource-sharing");
}

accel::RootProblem contest_root_problem() {
  accel::RootProblem p;
  p.g = [](double m) { return m * m - 2.0 * m - 3.0; };
  p.derivatives = {[](double m) { return 2.0 * m - 2.0; },
                   [](double) { return 2.0; }};
  p.lo = -100.0;
  p.hi = 100.0;
  p.associated_map = [](double m) { return presets::chi_sqrt(m); };
  return p;
}

ReproduceOutcome reproduce_table1() {
  ReproduceOutcome out;
  out.name = "table1";

  const auto picard = fixpoint::iterate(chi_sqrt_map(), Schedule::picard(),
                                        4.0, {.tol = 1e-300, .max_iters = 4});
  const auto p = picard.scalars();

  const auto problem = contest_root_problem();
  const auto sec4 =
      accel::secant_iterate(problem, 4.0, 3.316624790,
                            {.tol = 1e-300, .max_iters = 3});
  const auto s4 = sec4.scalars();
  const auto sec5 = accel::secant_iterate(problem, 5.0, std::nullopt,
                                          {.tol = 1e-300, .max_iters = 3});
  const auto s5 = sec5.scalars();

  out.table.header = {"t", "picard", "secant_from_4", "secant_from_5"};
  for (int t = 0; t < 5; ++t) {
    out.table.rows.push_back({static_cast<double>(t), p[t], s4[t], s5[t]});
    compare_cell(out, "picard row " + std::to_string(t), p[t],
                 goldens::kTable1Picard[t], goldens::kTable1PicardDecimals);
    compare_cell(out, "secant_from_4 row " + std::to_string(t), s4[t],
                 goldens::kTable1SecantFrom4[t],
                 goldens::kTable1SecantDecimals);
    compare_cell(out, "secant_from_5 row " + std::to_string(t), s5[t],
                 goldens::kTable1SecantFrom5[t],
                 goldens::kTable1SecantDecimals);
  }
  return out;
}

ReproduceOutcome reproduce_table2() {
  ReproduceOutcome out;
  out.name = "table2";

  const auto picard = fixpoint::iterate(chi_sqrt_map(), Schedule::picard(),
                                        4.0, {.tol = 1e-300, .max_iters = 4});
  const auto p = picard.scalars();
  const auto aitken = accel::aitken_transform(p);

  const auto st = accel::steffensen_iterate(chi_sqrt_map(), 4.0,
                                            {.tol = 1e-300, .max_iters = 4});
  const auto z = st.outer.scalars();

  out.table.header = {"t", "picard", "aitken", "steffensen"};
  for (int t = 0; t < 5; ++t) {
    out.table.rows.push_back(
        {static_cast<double>(t), p[t],
         t < static_cast<int>(aitken.size()) ? aitken[t] : kNaN,
         t < static_cast<int>(z.size()) ? z[t] : kNaN});
  }
  for (int t = 0; t < 3; ++t)
    compare_cell(out, "aitken row " + std::to_string(t), aitken[t],
                 goldens::kTable2Aitken[t], goldens::kTable2AitkenDecimals);
  compare_cell(out, "steffensen outer 2", z.at(2),
               goldens::kTable2SteffensenSecond, 9);
  compare_cell(out, "steffensen outer 3", z.at(3),
               goldens::kTable2SteffensenThird, 9);
  return out;
}

ReproduceOutcome reproduce_table3() {
  ReproduceOutcome out;
  out.name = "table3";

  const satisfy::MeanFieldSinr mf{20.0, 0.3, 1.0 / 30.0, 20.0};
  const auto bp = satisfy::meanfield_satisfy(
      mf, 2.0, satisfy::MeanFieldScheme::picard,
      {.tol = 1e-300, .max_iters = 49});
  const auto ri_schedule = Schedule::reverse_ishikawa(5.0 / 3.0);
  const auto ri = satisfy::meanfield_satisfy(
      mf, 2.0, satisfy::MeanFieldScheme::reverse_ishikawa,
      {.tol = 1e-300, .max_iters = 25}, &ri_schedule);
  const auto st = satisfy::meanfield_satisfy(
      mf, 12.0, satisfy::MeanFieldScheme::steffensen,
      {.tol = 1e-300, .max_iters = 3});

  const auto bp_vals = bp.traj.scalars();
  const auto ri_vals = ri.traj.scalars();

  // Evaluation-order listing of the restart run: z0, the two probes of the
  // first outer step, z1, the first probe of the second step, z2.
  std::vector<double> st_vals;
  const auto z = st.traj.scalars();
  st_vals.push_back(z.at(0));
  if (!st.steffensen_probes.empty()) {
    st_vals.push_back(st.steffensen_probes[0].first);
    st_vals.push_back(st.steffensen_probes[0].second);
  }
  if (z.size() > 1) st_vals.push_back(z[1]);
  if (st.steffensen_probes.size() > 1) {
    st_vals.push_back(st.steffensen_probes[1].first);
    if (z.size() > 2) st_vals.push_back(z[2]);
  }

  out.table.header = {"t", "banach_picard", "reverse_ishikawa", "steffensen"};
  for (int t = 0; t < 50; ++t) {
    out.table.rows.push_back(
        {static_cast<double>(t + 1), bp_vals[t],
         t < static_cast<int>(ri_vals.size()) ? ri_vals[t] : kNaN,
         t < static_cast<int>(st_vals.size()) ? st_vals[t] : kNaN});
    compare_cell(out, "banach_picard row " + std::to_string(t + 1),
                 bp_vals[t], goldens::kTable3BanachPicard[t],
                 goldens::kTable3Decimals);
    if (t < 26)
      compare_cell(out, "reverse_ishikawa row " + std::to_string(t + 1),
                   ri_vals[t], goldens::kTable3ReverseIshikawa[t],
                   goldens::kTable3Decimals);
  }
  for (int t = 4; t < 6; ++t)
    compare_cell(out, "steffensen row " + std::to_string(t + 1),
                 st_vals.at(t), goldens::kTable3Steffensen[t], 13);
  return out;
}

ReproduceOutcome reproduce_fig(double lambda, int steps,
                               const std::string& name) {
  ReproduceOutcome out;
  out.name = name;
  const auto traj = fixpoint::iterate(resource_map(), Schedule::mann(lambda),
                                      0.005, {.tol = 1e-300,
                                              .max_iters = steps,
                                              .cycle_check = false});
  const auto a = traj.scalars();
  out.table.header = {"t", "a"};
  for (std::size_t t = 0; t < a.size(); ++t)
    out.table.rows.push_back({static_cast<double>(t), a[t]});
  return out;
}

ReproduceOutcome reproduce_figtime(const FigtimeParams& params) {
  ReproduceOutcome out;
  out.name = "figtime-curve";
  out.table.header = {"eta_star", "T", "T_eta"};
  const double lo = std::log10(params.eta_star_min);
  const double hi = std::log10(params.eta_star_max);
  for (int i = 0; i < params.points; ++i) {
    const double eta_star =
        std::pow(10.0, lo + (hi - lo) * i / (params.points - 1.0));
    const bounds::SpeedupInputs in{params.eta0, eta_star, params.c2,
                                   params.o};
    const auto bound = bounds::speedup_time(in);
    out.table.rows.push_back(
        {eta_star, bound.T, static_cast<double>(bound.T_eta)});
  }
  return out;
}

} // namespace

ReproduceOutcome reproduce(const std::string& target,
                           const FigtimeParams& figtime) {
  if (target == "table1") return reproduce_table1();
  if (target == "table2") return reproduce_table2();
  if (target == "table3") return reproduce_table3();
  if (target == "fig1") return reproduce_fig(0.9, 500, "fig1");
  if (target == "fig2") return reproduce_fig(0.1, 2000, "fig2");
  if (target == "figtime-curve") return reproduce_figtime(figtime);
  throw Error(ErrorCode::config_invalid,
              "unknown reproduce target '" + target +
                  "' (expected table1, table2, table3, fig1, fig2, "
                  "figtime-curve)");
}

} // namespace mfl::cli
