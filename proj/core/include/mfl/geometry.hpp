#pragma once

#include <limits>
#include <vector>

namespace mfl {

using Point = std::vector<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Axis-aligned box; sides may be infinite.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  Box() = default;
  Box(std::vector<double> lo_, std::vector<double> hi_);

  /// 1-D convenience.
  static Box interval(double lo_, double hi_);

  std::size_t dimension() const { return lo.size(); }
  bool contains(const Point& x) const;
  bool bounded() const;

  /// Euclidean diameter; infinite for unbounded boxes.
  double diameter() const;
};

/// Componentwise clamp onto the box. Idempotent; total on finite bounds
/// (an infinite side simply never binds).
Point project_box(const Point& x, const Box& box);
double project_box(double x, double lo, double hi);

double distance(const Point& a, const Point& b);
double norm(const Point& a);

} // namespace mfl
