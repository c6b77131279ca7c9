#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spherescope/topology.hpp"

namespace spherescope {

// (max - min) of the word lengths along the closed loop traced by w from
// base. A relator loop bounds a 2-cell of the Cayley 2-complex; its level
// span is capped by floor(|w|/2) because the shorter arc between the
// extremal vertices has at most that many edges.
int relator_loop_span(const BallTable& b, const std::vector<std::string>& names,
                      const GeneratorMap& map, const Word& w, const ElementKey& base);

struct TheoremReport {
  std::string model_name;
  std::string model_spec;
  int ball_radius = 0;

  std::vector<std::string> relators;
  std::vector<int> relator_lengths;
  int radius_bound = 0;  // smallest r with 2r > max relator length; the r used

  int n_max = 0;
  int guard = 0;
  std::vector<int> component_counts;  // per n = 0..n_max
  bool spheres_connected = false;
  int first_disconnected = -1;

  std::uint64_t span_samples = 0;
  bool span_exhaustive = false;
  std::uint64_t seed = 0;
  int base_radius = 0;  // base points drawn from B_base_radius
  int max_span = 0;
  int span_bound = 0;  // floor(max relator length / 2)
  std::vector<int> per_relator_max_span;
  bool span_ok = false;

  bool pass = false;
};

struct VerifyOptions {
  int guard = -1;              // default: max(2r, 4)
  std::uint64_t seed = 0;      // used only when sampling
  std::uint64_t sample_cap = 100'000;  // exhaustive below this many base points
};

// Checks that every relator holds in the model, then scans thick spheres at
// r = theorem_radius(p) and measures relator-loop spans over base points of
// the ball. Pass = every thick sphere connected and every span within
// floor(|w|/2).
TheoremReport verify_theorem(const BallTable& b, const Presentation& p, int n_max,
                             const VerifyOptions& opts = {});

}  // namespace spherescope
