#include "mfl/schedule.hpp"

#include <cmath>
#include <string>

#include "mfl/errors.hpp"

namespace mfl {

const char* to_string(SchemeKind kind) noexcept {
  switch (kind) {
    case SchemeKind::picard: return "picard";
    case SchemeKind::mann: return "mann";
    case SchemeKind::ishikawa: return "ishikawa";
    case SchemeKind::reverse_ishikawa: return "reverse_ishikawa";
  }
  return "?";
}

namespace {
std::function<double(int)> constant(double v) {
  return [v](int) { return v; };
}
std::function<double(int)> zero() { return constant(0.0); }
} // namespace

Schedule Schedule::picard() {
  return {SchemeKind::picard, constant(1.0), zero()};
}

Schedule Schedule::mann(double lambda_const) {
  return {SchemeKind::mann, constant(lambda_const), zero()};
}

Schedule Schedule::mann(std::function<double(int)> lambda_fn) {
  return {SchemeKind::mann, std::move(lambda_fn), zero()};
}

Schedule Schedule::ishikawa(double lambda_const, double mu_const) {
  return {SchemeKind::ishikawa, constant(lambda_const), constant(mu_const)};
}

Schedule Schedule::ishikawa(std::function<double(int)> lambda_fn,
                            std::function<double(int)> mu_fn) {
  return {SchemeKind::ishikawa, std::move(lambda_fn), std::move(mu_fn)};
}

Schedule Schedule::reverse_ishikawa() {
  return {SchemeKind::reverse_ishikawa,
          [](int t) { return 1.0 + std::pow(1.0 / 1.5, t); }, zero()};
}

Schedule Schedule::reverse_ishikawa(double lambda_const) {
  return {SchemeKind::reverse_ishikawa, constant(lambda_const), zero()};
}

Schedule Schedule::reverse_ishikawa(std::function<double(int)> lambda_fn) {
  return {SchemeKind::reverse_ishikawa, std::move(lambda_fn), zero()};
}

void Schedule::validate_step(int t) const {
  const double l = lambda ? lambda(t) : 1.0;
  const double m = mu ? mu(t) : 0.0;
  auto fail = [&](const char* what) {
    throw Error(ErrorCode::invalid_schedule,
                std::string(what) + " at t=" + std::to_string(t) +
                    " for kind " + to_string(kind) +
                    " (lambda=" + std::to_string(l) +
                    ", mu=" + std::to_string(m) + ")");
  };
  switch (kind) {
    case SchemeKind::picard:
      if (l != 1.0 || m != 0.0) fail("picard requires lambda=1, mu=0");
      break;
    case SchemeKind::mann:
      if (!(l > 0.0 && l <= 1.0)) fail("mann requires 0 < lambda <= 1");
      if (m != 0.0) fail("mann requires mu = 0");
      break;
    case SchemeKind::ishikawa:
      if (!(l > 0.0 && l <= 1.0)) fail("ishikawa requires 0 < lambda <= 1");
      if (!(m >= 0.0 && m <= 1.0)) fail("ishikawa requires 0 <= mu <= 1");
      break;
    case SchemeKind::reverse_ishikawa:
      if (!(l >= 1.0 && l < 2.0))
        fail("reverse_ishikawa requires 1 <= lambda < 2");
      if (m != 0.0) fail("reverse_ishikawa requires mu = 0");
      break;
  }
}

} // namespace mfl
