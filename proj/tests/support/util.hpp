#pragma once

#include <functional>
#include <initializer_list>
#include <stdexcept>

#include "spherescope/errors.hpp"
#include "spherescope/group.hpp"

namespace testutil {

// Runs f and returns the Errc it throws; fails the test (via logic_error) if
// nothing is thrown.
inline spherescope::Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const spherescope::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a spherescope::Error");
}

inline spherescope::ElementKey trace_gens(const spherescope::GroupModel& m,
                                          std::initializer_list<int> gens) {
  spherescope::ElementKey g = m.identity();
  for (int i : gens) g = m.apply(g, i);
  return g;
}

}  // namespace testutil
