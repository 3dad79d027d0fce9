#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mfl/geometry.hpp"

namespace mfl {

/// A self-map of a box domain. eval must map the domain into the domain;
/// every call is checked and a violation throws Error(domain_violation).
///
/// derivatives, when supplied, hold the k-th derivative evaluators of a
/// scalar map (k = 1..K). They are spot-checked against finite differences
/// by the test suite, not at runtime.
struct IterationMap {
  std::size_t dim = 1;
  Box domain;
  std::function<Point(const Point&)> eval_fn;
  std::vector<std::function<double(double)>> derivatives;
  std::string name;

  /// Checked evaluation. Throws Error(domain_violation) if x or f(x) is
  /// outside the domain.
  Point operator()(const Point& x) const;

  /// Scalar convenience; requires dim == 1.
  double operator()(double x) const;

  bool scalar() const { return dim == 1; }
};

IterationMap make_scalar_map(std::function<double(double)> f, double lo,
                             double hi,
                             std::vector<std::function<double(double)>>
                                 derivatives = {},
                             std::string name = {});

} // namespace mfl
