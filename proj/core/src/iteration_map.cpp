#include "mfl/iteration_map.hpp"

#include <utility>

#include "mfl/errors.hpp"

namespace mfl {

Point IterationMap::operator()(const Point& x) const {
  if (!domain.contains(x))
    throw Error(ErrorCode::domain_violation,
                "argument outside the domain of map " + name);
  Point y = eval_fn(x);
  if (!domain.contains(y))
    throw Error(ErrorCode::domain_violation,
                "map " + name + " left its domain (not a self-map here)");
  return y;
}

double IterationMap::operator()(double x) const {
  Point y = (*this)(Point{x});
  return y[0];
}

IterationMap make_scalar_map(std::function<double(double)> f, double lo,
                             double hi,
                             std::vector<std::function<double(double)>>
                                 derivatives,
                             std::string name) {
  IterationMap m;
  m.dim = 1;
  m.domain = Box::interval(lo, hi);
  m.eval_fn = [f = std::move(f)](const Point& x) { return Point{f(x[0])}; };
  m.derivatives = std::move(derivatives);
  m.name = std::move(name);
  return m;
}

} // namespace mfl
