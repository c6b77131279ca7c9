#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spherescope/topology.hpp"

namespace spherescope {

struct DepthRecord {
  ElementKey key;
  int length = 0;
  bool dead_end = false;   // no neighbour is longer
  int depth = 0;           // distance to the horizon part of the complement of B_|g|
  int retreat_depth = 0;   // smallest d with g in the horizon part of the complement of B_{|g|-d}
  bool horizon_limited = false;  // depth BFS touched the outermost sphere
};

// Shared component-map cache for per-element depth queries. Read-only over
// the ball; one analyzer per census run.
class DepthAnalyzer {
 public:
  explicit DepthAnalyzer(const BallTable& b, int guard = -1);

  const BallTable& ball() const { return ball_; }
  int guard() const { return guard_; }

  bool is_dead_end(const ElementKey& g) const;
  int element_depth(const ElementKey& g);
  int retreat_depth(const ElementKey& g);
  DepthRecord record(const ElementKey& g);

  const ComponentMap& components(int n);

 private:
  void check_element(const ElementKey& g) const;
  std::pair<int, bool> depth_with_flag(const ElementKey& g);

  const BallTable& ball_;
  int guard_;
  std::map<int, ComponentMap> cache_;
};

int element_depth(const BallTable& b, const ElementKey& g, int guard = -1);
int retreat_depth(const BallTable& b, const ElementKey& g, int guard = -1);
bool is_dead_end(const BallTable& b, const ElementKey& g);

struct CensusRow {
  int n = 0;
  std::uint64_t sphere_size = 0;
  std::uint64_t dead_end_count = 0;
  int max_depth = 0;
  int max_retreat_depth = 0;
  ElementKey dead_end_witness;  // smallest dead-end key at this radius, if any
  ElementKey depth_witness;     // smallest key achieving max_depth
  ElementKey retreat_witness;   // smallest key achieving max_retreat_depth
  bool horizon_limited = false;
};

struct DeadEndCensus {
  std::string model_spec;
  int ball_radius = 0;
  int n_max = 0;
  int guard = 0;
  std::vector<CensusRow> rows;
};

// Per-radius dead-end counts, extremal depths, and witnesses for all
// elements with |g| <= n_max.
DeadEndCensus dead_end_census(const BallTable& b, int n_max, int guard = -1);

}  // namespace spherescope
