#include "mfl/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mfl {

Box::Box(std::vector<double> lo_, std::vector<double> hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size())
    throw std::invalid_argument("Box: lo/hi size mismatch");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] <= hi[i]))
      throw std::invalid_argument("Box: lo > hi");
}

Box Box::interval(double lo_, double hi_) { return Box({lo_}, {hi_}); }

bool Box::contains(const Point& x) const {
  if (x.size() != lo.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::isnan(x[i]) || x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

bool Box::bounded() const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (std::isinf(lo[i]) || std::isinf(hi[i])) return false;
  return true;
}

double Box::diameter() const {
  double s = 0.0;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    double side = hi[i] - lo[i];
    if (std::isinf(side)) return kInf;
    s += side * side;
  }
  return std::sqrt(s);
}

double project_box(double x, double lo, double hi) {
  return std::min(hi, std::max(lo, x));
}

Point project_box(const Point& x, const Box& box) {
  Point y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    y[i] = project_box(x[i], box.lo[i], box.hi[i]);
  return y;
}

double distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double norm(const Point& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

} // namespace mfl
