#pragma once

#include <string>
#include <vector>

#include "mfl/csv.hpp"

namespace mfl::cli {

struct FigtimeParams {
  double eta0 = 0.5;
  double c2 = 0.9;
  int o = 1;
  double eta_star_min = 1e-8;
  double eta_star_max = 1e-1;
  int points = 29;
};

struct ReproduceOutcome {
  std::string name;
  csv::Table table;
  bool compared = false; // golden comparison was applicable
  bool matched = true;
  std::vector<std::string> mismatches;
};

/// Targets: table1, table2, table3, fig1, fig2, figtime-curve.
/// Tables carry embedded reference values and report any mismatch; figure
/// targets emit plot data only.
ReproduceOutcome reproduce(const std::string& target,
                           const FigtimeParams& figtime = {});

/// Canonical scalar maps used by the reproduction targets.
namespace presets {
/// m -> sqrt(3 + 2m) on [0, 100].
double chi_sqrt(double m);
/// Demand response [sqrt(s) - s]_+, s = 9a (10-player unit resource game).
double resource_sharing10(double a);
} // namespace presets

} // namespace mfl::cli
