#include "spherescope/errors.hpp"

#include <cstdint>

namespace spherescope {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::syntax_error: return "syntax_error";
    case Errc::unknown_generator: return "unknown_generator";
    case Errc::empty_relator: return "empty_relator";
    case Errc::no_relators: return "no_relators";
    case Errc::unknown_model_spec: return "unknown_model_spec";
    case Errc::invalid_parameter: return "invalid_parameter";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::not_in_ball: return "not_in_ball";
    case Errc::out_of_range: return "out_of_range";
    case Errc::guard_violation: return "guard_violation";
    case Errc::no_horizon_component: return "no_horizon_component";
    case Errc::not_simply_connected: return "not_simply_connected";
    case Errc::unmapped_letter: return "unmapped_letter";
    case Errc::relator_does_not_hold: return "relator_does_not_hold";
    case Errc::loop_exits_ball: return "loop_exits_ball";
    case Errc::cache_format: return "cache_format";
    case Errc::size_exceeded: return "size_exceeded";
    case Errc::empty_target: return "empty_target";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

BudgetExceeded::BudgetExceeded(int last_completed_radius, std::uint64_t budget)
    : Error(Errc::budget_exceeded,
            "vertex budget " + std::to_string(budget) +
                " exceeded; last completed radius " + std::to_string(last_completed_radius)),
      last_completed_(last_completed_radius) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace spherescope
