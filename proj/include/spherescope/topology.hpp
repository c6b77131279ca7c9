#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spherescope/ball.hpp"

namespace spherescope {

// Classification of a complement component. Components with no vertex on the
// outermost computed sphere are separated from everything outside B_N by the
// inner ball, hence provably finite in the full Cayley graph. Components that
// touch the horizon sphere S_N are treated as (potentially) infinite.
enum class ComponentClass { enclosed_finite, horizon };

struct ComponentInfo {
  ElementKey min_key;  // smallest canonical key in the component; fixes the id order
  std::uint64_t size = 0;
  int min_length = 0;
  ComponentClass cls = ComponentClass::enclosed_finite;
};

// Connected components of the induced subgraph on B_N \ B_n.
class ComponentMap {
 public:
  ComponentMap(int ball_radius, int inner_radius, std::vector<ComponentInfo> components,
               std::unordered_map<ElementKey, int> component_of);

  int ball_radius() const { return ball_radius_; }
  int inner_radius() const { return inner_radius_; }
  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<ComponentInfo>& components() const { return components_; }

  bool contains(const ElementKey& g) const { return component_of_.count(g) != 0; }
  int component_id(const ElementKey& g) const;  // throws not_in_ball if outside the annulus
  bool in_horizon(const ElementKey& g) const;

  int horizon_count() const;
  int enclosed_count() const;
  std::uint64_t horizon_size() const;

  // All vertices lying in horizon components, sorted.
  std::vector<ElementKey> horizon_keys() const;

 private:
  int ball_radius_, inner_radius_;
  std::vector<ComponentInfo> components_;
  std::unordered_map<ElementKey, int> component_of_;
};

// A set of vertices of the ball, kept sorted for determinism.
struct Region {
  std::vector<ElementKey> keys;

  static Region ball(const BallTable& b, int k);
  static Region annulus(const BallTable& b, int inner, int outer);  // inner < |g| <= outer
  static Region of(std::vector<ElementKey> keys);

  bool contains(const ElementKey& g) const;
  std::size_t size() const { return keys.size(); }
  bool empty() const { return keys.empty(); }
};

// Horizon-trust guard. Classifications of the complement of B_n are trusted
// when n <= N - guard; the stability check (recompute at N+2) backs this up
// empirically. Negative `guard` selects the default.
inline constexpr int kBaseGuard = 4;
int horizon_guard(int r, int guard_override = -1);  // max(2r, 4) by default

ComponentMap complement_components(const BallTable& b, int n);

// Union of the horizon components of B_N \ B_n: the computable stand-in for
// the infinite part of the complement. For groups with more than one end
// this unions several components; reports flag that case.
Region infinite_part(const BallTable& b, int n, int guard = -1);

struct ThickSphereResult {
  int n = 0;
  int r = 0;
  int component_count = 0;
  std::vector<ElementKey> representatives;     // smallest key per component, ascending
  std::vector<std::uint64_t> component_sizes;  // aligned with representatives
  std::uint64_t infinite_part_size = 0;        // |horizon part of B_N \ B_n|
  int horizon_component_count = 0;             // at inner radius n
};

// Components of the induced subgraph on B_{n+r} intersected with the horizon
// part of the complement of B_n. 1 means the thick sphere is connected.
ThickSphereResult thick_sphere_components(const BallTable& b, int n, int r, int guard = -1);

struct SphereScan {
  std::string model_spec;
  int ball_radius = 0;
  int r = 0;
  int n_max = 0;
  int guard = 0;
  std::vector<ThickSphereResult> rows;  // n = 0..n_max
  bool all_connected = false;
  std::optional<int> first_disconnected;
};

SphereScan scan_connected_spheres(const BallTable& b, int r, int n_max, int guard = -1);

struct RadiusSearchDiagnostic {
  int r = 0;
  int first_disconnected_n = 0;
  int component_count = 0;
};

struct RadiusSearch {
  int n_max = 0;
  int r_cap = 0;
  std::optional<int> found;
  std::vector<RadiusSearchDiagnostic> diagnostics;  // one per failing r < found (or all, if none)
};

// Smallest r <= r_cap whose scan is all-connected on n = 0..n_max.
RadiusSearch min_connecting_radius(const BallTable& b, int n_max, int r_cap, int guard = -1);

struct SimplyConnectedCheck {
  bool region_connected = false;
  bool complement_connected = false;
  // Always computed inside B_N; the complement check can only see up to the
  // horizon.
  bool horizon_limited = true;

  bool ok() const { return region_connected && complement_connected; }
};

SimplyConnectedCheck is_simply_connected_region(const BallTable& b, const Region& omega,
                                                int guard = -1);

// Components of the dilation shell (omega^{+r} \ omega), where the dilation
// adds every vertex within graph distance r of omega.
int shell_components(const BallTable& b, const Region& omega, int r, int guard = -1);

enum class EndsTail { stabilizes, grows, inconclusive };

const char* ends_tail_name(EndsTail t);

struct EndsProfile {
  int r = 0;
  int n_max = 0;
  std::vector<ThickSphereResult> rows;
  EndsTail tail = EndsTail::inconclusive;
  int stable_value = 0;  // meaningful when tail == stabilizes
};

EndsProfile ends_profile(const BallTable& b, int r, int n_max, int guard = -1);

}  // namespace spherescope
