#include "mfl/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mfl/errors.hpp"

namespace mfl::csv {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string Table::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
  return out.str();
}

Table trajectory_table(const Trajectory& traj) {
  Table table;
  const std::size_t dim = traj.iterates.empty() ? 0 : traj.iterates[0].size();
  table.header.push_back("t");
  for (std::size_t d = 0; d < dim; ++d)
    table.header.push_back("x" + std::to_string(d));
  table.header.push_back("residual");
  table.header.push_back("evaluations");
  for (std::size_t t = 0; t < traj.iterates.size(); ++t) {
    std::vector<double> row;
    row.push_back(static_cast<double>(t));
    for (double v : traj.iterates[t]) row.push_back(v);
    row.push_back(t < traj.residuals.size() ? traj.residuals[t] : 0.0);
    row.push_back(t < traj.evaluations_at.size()
                      ? static_cast<double>(traj.evaluations_at[t])
                      : 0.0);
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table parse(const std::string& text) {
  Table table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream cells(line);
    std::string cell;
    if (first) {
      while (std::getline(cells, cell, ',')) table.header.push_back(cell);
      first = false;
      continue;
    }
    std::vector<double> row;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    table.rows.push_back(std::move(row));
  }
  return table;
}

Trajectory parse_trajectory(const std::string& text) {
  const Table table = parse(text);
  if (table.header.size() < 3 || table.header.front() != "t")
    throw Error(ErrorCode::config_invalid, "not a trajectory table");
  const std::size_t dim = table.header.size() - 3;
  Trajectory traj;
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size())
      throw Error(ErrorCode::config_invalid, "ragged trajectory table");
    traj.iterates.push_back(Point(row.begin() + 1, row.begin() + 1 + dim));
    traj.residuals.push_back(row[1 + dim]);
    traj.evaluations_at.push_back(static_cast<std::int64_t>(row[2 + dim]));
  }
  if (!traj.evaluations_at.empty()) traj.evaluations = traj.evaluations_at.back();
  return traj;
}

Table xy_table(const std::string& x_name, const std::string& y_name,
               const std::vector<double>& x, const std::vector<double>& y) {
  Table table;
  table.header = {x_name, y_name};
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
    table.rows.push_back({x[i], y[i]});
  return table;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::config_invalid, "cannot open " + path +
                                               " for writing");
  out << contents;
}

} // namespace mfl::csv
