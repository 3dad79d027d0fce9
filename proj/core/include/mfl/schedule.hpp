#pragma once

#include <functional>

namespace mfl {

enum class SchemeKind { picard, mann, ishikawa, reverse_ishikawa };

const char* to_string(SchemeKind kind) noexcept;

/// Step-size sequences for the learning schemes. Step indices are 1-based:
/// the update producing iterate t uses lambda(t), mu(t).
///
/// Range contract per kind (degenerate endpoints are accepted so that
/// mann/ishikawa with lambda = 1 reduce to picard, and reverse_ishikawa
/// with lambda = 1 reduces to the plain iteration):
///   picard            lambda = 1, mu = 0
///   mann              0 < lambda <= 1, mu = 0
///   ishikawa          0 < lambda <= 1, 0 <= mu <= 1
///   reverse_ishikawa  1 <= lambda < 2 (decreasing to 1 in the default)
struct Schedule {
  SchemeKind kind = SchemeKind::picard;
  std::function<double(int)> lambda;
  std::function<double(int)> mu;

  static Schedule picard();
  static Schedule mann(double lambda_const);
  static Schedule mann(std::function<double(int)> lambda_fn);
  static Schedule ishikawa(double lambda_const, double mu_const);
  static Schedule ishikawa(std::function<double(int)> lambda_fn,
                           std::function<double(int)> mu_fn);
  /// Default over-relaxation 1 + 1/1.5^t, decreasing to 1.
  static Schedule reverse_ishikawa();
  static Schedule reverse_ishikawa(double lambda_const);
  static Schedule reverse_ishikawa(std::function<double(int)> lambda_fn);

  /// Throws Error(invalid_schedule) if (lambda(t), mu(t)) violates the
  /// range contract of the kind.
  void validate_step(int t) const;
};

} // namespace mfl
