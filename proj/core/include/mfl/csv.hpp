#pragma once

#include <string>
#include <vector>

#include "mfl/trajectory.hpp"

namespace mfl::csv {

/// 17 significant digits: doubles survive a print/parse round trip.
std::string format_double(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::string to_string() const;
};

/// Columns t, x0..x{d-1}, residual, evaluations.
Table trajectory_table(const Trajectory& traj);

/// Inverse of trajectory_table on the printed precision.
Trajectory parse_trajectory(const std::string& text);

Table xy_table(const std::string& x_name, const std::string& y_name,
               const std::vector<double>& x, const std::vector<double>& y);

Table parse(const std::string& text);

void write_file(const std::string& path, const std::string& contents);

} // namespace mfl::csv
