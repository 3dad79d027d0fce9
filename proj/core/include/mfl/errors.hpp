#pragma once

#include <stdexcept>
#include <string>

namespace mfl {

enum class ErrorCode {
  domain_violation,
  invalid_schedule,
  insufficient_history,
  unbounded_domain,
  derivative_vanishes,
  missing_derivatives,
  flat_secant,
  too_short,
  nonmonotone_errors,
  invalid_inputs,
  unreachable_time,
  no_critical_point,
  singular_system,
  zero_payoff,
  oracle_failure,
  config_invalid,
};

const char* to_string(ErrorCode code) noexcept;

/// Library error carrying a machine-checkable code plus a human message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace mfl
