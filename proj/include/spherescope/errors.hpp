#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spherescope {

enum class Errc {
  syntax_error,
  unknown_generator,
  empty_relator,
  no_relators,
  unknown_model_spec,
  invalid_parameter,
  budget_exceeded,
  not_in_ball,
  out_of_range,
  guard_violation,
  no_horizon_component,
  not_simply_connected,
  unmapped_letter,
  relator_does_not_hold,
  loop_exits_ball,
  cache_format,
  size_exceeded,
  empty_target,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Ball construction aborted by the vertex budget; carries the largest
// radius whose sphere was fully enumerated before the cap was hit.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(int last_completed_radius, std::uint64_t budget);
  int last_completed_radius() const { return last_completed_; }

 private:
  int last_completed_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace spherescope
