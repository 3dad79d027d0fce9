#include "mfl/errors.hpp"

namespace mfl {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain_violation: return "domain_violation";
    case ErrorCode::invalid_schedule: return "invalid_schedule";
    case ErrorCode::insufficient_history: return "insufficient_history";
    case ErrorCode::unbounded_domain: return "unbounded_domain";
    case ErrorCode::derivative_vanishes: return "derivative_vanishes";
    case ErrorCode::missing_derivatives: return "missing_derivatives";
    case ErrorCode::flat_secant: return "flat_secant";
    case ErrorCode::too_short: return "too_short";
    case ErrorCode::nonmonotone_errors: return "nonmonotone_errors";
    case ErrorCode::invalid_inputs: return "invalid_inputs";
    case ErrorCode::unreachable_time: return "unreachable_time";
    case ErrorCode::no_critical_point: return "no_critical_point";
    case ErrorCode::singular_system: return "singular_system";
    case ErrorCode::zero_payoff: return "zero_payoff";
    case ErrorCode::oracle_failure: return "oracle_failure";
    case ErrorCode::config_invalid: return "config_invalid";
  }
  return "?";
}

} // namespace mfl
