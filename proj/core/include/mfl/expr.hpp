#pragma once

#include <functional>
#include <string>

namespace mfl::expr {

/// One-variable arithmetic expression over +, -, *, /, sqrt, sin, abs,
/// min, max, numeric literals and parentheses. Any identifier that is not a
/// function name is the variable; all occurrences must agree.
struct Expression {
  std::function<double(double)> fn;
  std::string variable; // empty for constant expressions
  std::string source;

  double operator()(double x) const { return fn(x); }
};

/// Throws Error(config_invalid) with a position diagnostic on bad input.
Expression parse_expression(const std::string& source);

} // namespace mfl::expr
