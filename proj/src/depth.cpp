#include "spherescope/depth.hpp"

#include <algorithm>
#include <unordered_set>

#include "spherescope/errors.hpp"

namespace spherescope {

DepthAnalyzer::DepthAnalyzer(const BallTable& b, int guard)
    : ball_(b), guard_(guard >= 0 ? guard : kBaseGuard) {}

const ComponentMap& DepthAnalyzer::components(int n) {
  auto it = cache_.find(n);
  if (it == cache_.end()) it = cache_.emplace(n, complement_components(ball_, n)).first;
  return it->second;
}

void DepthAnalyzer::check_element(const ElementKey& g) const {
  int len = ball_.length_of(g);
  if (len > ball_.radius() - guard_ - 1)
    fail(Errc::guard_violation, "element length " + std::to_string(len) +
                                    " exceeds N - guard - 1 = " +
                                    std::to_string(ball_.radius() - guard_ - 1));
}

bool DepthAnalyzer::is_dead_end(const ElementKey& g) const {
  int len = ball_.length_of(g);
  // Neighbours of anything within the guard are inside the ball, so a
  // missing neighbour cannot be mistaken for a short one.
  check_element(g);
  const GroupModel& m = ball_.model();
  for (int i = 0; i < m.generator_count(); ++i) {
    if (ball_.length_of(m.apply(g, i)) > len) return false;
  }
  return true;
}

std::pair<int, bool> DepthAnalyzer::depth_with_flag(const ElementKey& g) {
  check_element(g);
  int len = ball_.length_of(g);
  const ComponentMap& cm = components(len);

  // BFS from g through the whole ball until the horizon part of the
  // complement of B_|g| is reached. g itself has length |g|, so it is never
  // in the target and the distance is >= 1.
  std::unordered_set<ElementKey> visited;
  visited.insert(g);
  std::vector<ElementKey> frontier{g};
  bool touched_horizon_sphere = false;
  for (int level = 1;; ++level) {
    std::vector<ElementKey> next;
    for (const ElementKey& v : frontier) {
      const GroupModel& m = ball_.model();
      for (int i = 0; i < m.generator_count(); ++i) {
        ElementKey h = m.apply(v, i);
        if (!ball_.contains(h)) continue;
        if (!visited.insert(h).second) continue;
        if (cm.in_horizon(h)) return {level, touched_horizon_sphere};
        if (ball_.length_of(h) == ball_.radius()) touched_horizon_sphere = true;
        next.push_back(std::move(h));
      }
    }
    if (next.empty())
      fail(Errc::empty_target, "no horizon vertex reachable from " + ball_.model().describe(g));
    frontier = std::move(next);
  }
}

int DepthAnalyzer::element_depth(const ElementKey& g) { return depth_with_flag(g).first; }

int DepthAnalyzer::retreat_depth(const ElementKey& g) {
  check_element(g);
  int len = ball_.length_of(g);
  for (int d = 1; d <= len; ++d) {
    if (components(len - d).in_horizon(g)) return d;
  }
  // B_m is empty for m < 0; its complement is the whole graph, one infinite
  // component, so d = |g| + 1 always succeeds.
  return len + 1;
}

DepthRecord DepthAnalyzer::record(const ElementKey& g) {
  DepthRecord rec;
  rec.key = g;
  rec.length = ball_.length_of(g);
  rec.dead_end = is_dead_end(g);
  auto [depth, limited] = depth_with_flag(g);
  rec.depth = depth;
  rec.horizon_limited = limited;
  rec.retreat_depth = retreat_depth(g);
  return rec;
}

int element_depth(const BallTable& b, const ElementKey& g, int guard) {
  DepthAnalyzer a(b, guard);
  return a.element_depth(g);
}

int retreat_depth(const BallTable& b, const ElementKey& g, int guard) {
  DepthAnalyzer a(b, guard);
  return a.retreat_depth(g);
}

bool is_dead_end(const BallTable& b, const ElementKey& g) {
  DepthAnalyzer a(b);
  return a.is_dead_end(g);
}

DeadEndCensus dead_end_census(const BallTable& b, int n_max, int guard) {
  DepthAnalyzer a(b, guard);
  if (n_max < 0) fail(Errc::invalid_parameter, "n_max must be >= 0");
  if (n_max > b.radius() - a.guard() - 1)
    fail(Errc::guard_violation, "census radius " + std::to_string(n_max) +
                                    " exceeds N - guard - 1 = " +
                                    std::to_string(b.radius() - a.guard() - 1));

  DeadEndCensus census;
  census.model_spec = b.model().spec();
  census.ball_radius = b.radius();
  census.n_max = n_max;
  census.guard = a.guard();
  for (int n = 0; n <= n_max; ++n) {
    CensusRow row;
    row.n = n;
    row.sphere_size = b.sphere_size(n);
    for (const ElementKey& g : b.keys_at(n)) {
      DepthRecord rec = a.record(g);
      if (rec.dead_end) {
        ++row.dead_end_count;
        if (row.dead_end_witness.empty()) row.dead_end_witness = g;
      }
      if (rec.depth > row.max_depth) {
        row.max_depth = rec.depth;
        row.depth_witness = g;
      }
      if (rec.retreat_depth > row.max_retreat_depth) {
        row.max_retreat_depth = rec.retreat_depth;
        row.retreat_witness = g;
      }
      row.horizon_limited = row.horizon_limited || rec.horizon_limited;
    }
    census.rows.push_back(std::move(row));
  }
  return census;
}

}  // namespace spherescope
