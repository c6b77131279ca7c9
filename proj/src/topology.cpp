#include "spherescope/topology.hpp"

#include <algorithm>
#include <numeric>

#include "spherescope/errors.hpp"

namespace spherescope {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  std::vector<std::uint32_t> rank;

  explicit DisjointSets(std::size_t n) : parent(n), rank(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    if (rank[static_cast<std::size_t>(a)] == rank[static_cast<std::size_t>(b)])
      ++rank[static_cast<std::size_t>(a)];
  }
};

// Components of the induced subgraph on `keys` (sorted). Ids are assigned in
// order of each component's smallest key, which is also its smallest index.
struct InducedComponents {
  std::vector<int> comp_of;  // per index into keys
  int count = 0;
};

InducedComponents induced_components(const BallTable& b, const std::vector<ElementKey>& keys) {
  std::unordered_map<ElementKey, int> index;
  index.reserve(keys.size() * 2);
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], static_cast<int>(i));

  DisjointSets dsu(keys.size());
  int gens = b.model().generator_count();
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (int s = 0; s < gens; ++s) {
      ElementKey h = b.model().apply(keys[i], s);
      auto it = index.find(h);
      if (it != index.end()) dsu.unite(static_cast<int>(i), it->second);
    }
  }

  InducedComponents out;
  out.comp_of.assign(keys.size(), -1);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    int root = dsu.find(static_cast<int>(i));
    if (out.comp_of[static_cast<std::size_t>(root)] < 0)
      out.comp_of[static_cast<std::size_t>(root)] = out.count++;
    out.comp_of[i] = out.comp_of[static_cast<std::size_t>(root)];
  }
  return out;
}

int resolved_guard(int r, int guard) { return guard >= 0 ? guard : horizon_guard(r); }

void check_trust(const BallTable& b, int n, int guard, const char* what) {
  if (n > b.radius() - guard)
    fail(Errc::guard_violation, std::string(what) + ": inner radius " + std::to_string(n) +
                                    " exceeds N - guard = " + std::to_string(b.radius() - guard));
}

}  // namespace

int horizon_guard(int r, int guard_override) {
  if (guard_override >= 0) return guard_override;
  return std::max(2 * r, kBaseGuard);
}

ComponentMap::ComponentMap(int ball_radius, int inner_radius, std::vector<ComponentInfo> components,
                           std::unordered_map<ElementKey, int> component_of)
    : ball_radius_(ball_radius),
      inner_radius_(inner_radius),
      components_(std::move(components)),
      component_of_(std::move(component_of)) {}

int ComponentMap::component_id(const ElementKey& g) const {
  auto it = component_of_.find(g);
  if (it == component_of_.end())
    fail(Errc::not_in_ball, "element is not in the annulus B_" + std::to_string(ball_radius_) +
                                " \\ B_" + std::to_string(inner_radius_));
  return it->second;
}

bool ComponentMap::in_horizon(const ElementKey& g) const {
  auto it = component_of_.find(g);
  if (it == component_of_.end()) return false;
  return components_[static_cast<std::size_t>(it->second)].cls == ComponentClass::horizon;
}

int ComponentMap::horizon_count() const {
  int c = 0;
  for (const auto& info : components_)
    if (info.cls == ComponentClass::horizon) ++c;
  return c;
}

int ComponentMap::enclosed_count() const { return component_count() - horizon_count(); }

std::uint64_t ComponentMap::horizon_size() const {
  std::uint64_t s = 0;
  for (const auto& info : components_)
    if (info.cls == ComponentClass::horizon) s += info.size;
  return s;
}

std::vector<ElementKey> ComponentMap::horizon_keys() const {
  std::vector<ElementKey> out;
  for (const auto& [key, id] : component_of_)
    if (components_[static_cast<std::size_t>(id)].cls == ComponentClass::horizon)
      out.push_back(key);
  std::sort(out.begin(), out.end());
  return out;
}

Region Region::ball(const BallTable& b, int k) {
  if (k < 0 || k > b.radius()) fail(Errc::out_of_range, "region ball radius");
  return Region{b.keys_with_length_in(0, k)};
}

Region Region::annulus(const BallTable& b, int inner, int outer) {
  if (inner < -1 || outer > b.radius() || inner >= outer)
    fail(Errc::out_of_range, "region annulus bounds");
  return Region{b.keys_with_length_in(inner + 1, outer)};
}

Region Region::of(std::vector<ElementKey> keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return Region{std::move(keys)};
}

bool Region::contains(const ElementKey& g) const {
  return std::binary_search(keys.begin(), keys.end(), g);
}

ComponentMap complement_components(const BallTable& b, int n) {
  if (n < 0 || n >= b.radius())
    fail(Errc::out_of_range,
         "inner radius " + std::to_string(n) + " not in [0," + std::to_string(b.radius() - 1) + ")");

  std::vector<ElementKey> keys = b.keys_with_length_in(n + 1, b.radius());
  InducedComponents ic = induced_components(b, keys);

  std::vector<ComponentInfo> infos(static_cast<std::size_t>(ic.count));
  std::vector<bool> seen(static_cast<std::size_t>(ic.count), false);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto id = static_cast<std::size_t>(ic.comp_of[i]);
    int len = b.length_of(keys[i]);
    if (!seen[id]) {
      seen[id] = true;
      infos[id].min_key = keys[i];  // keys are sorted: first hit is the minimum
      infos[id].min_length = len;
    }
    infos[id].size += 1;
    infos[id].min_length = std::min(infos[id].min_length, len);
    if (len == b.radius()) infos[id].cls = ComponentClass::horizon;
  }

  std::unordered_map<ElementKey, int> component_of;
  component_of.reserve(keys.size() * 2);
  for (std::size_t i = 0; i < keys.size(); ++i)
    component_of.emplace(keys[i], ic.comp_of[i]);

  return ComponentMap(b.radius(), n, std::move(infos), std::move(component_of));
}

Region infinite_part(const BallTable& b, int n, int guard) {
  int g = resolved_guard(0, guard);
  check_trust(b, n, g, "infinite_part");
  ComponentMap cm = complement_components(b, n);
  std::vector<ElementKey> keys = cm.horizon_keys();
  if (keys.empty())
    fail(Errc::no_horizon_component,
         "no horizon component in the complement of B_" + std::to_string(n));
  return Region{std::move(keys)};
}

ThickSphereResult thick_sphere_components(const BallTable& b, int n, int r, int guard) {
  if (n < 0) fail(Errc::out_of_range, "n must be >= 0");
  if (r < 1) fail(Errc::invalid_parameter, "thickness r must be >= 1");
  int g = resolved_guard(r, guard);
  check_trust(b, n, g, "thick_sphere_components");
  if (n + r > b.radius())
    fail(Errc::guard_violation, "thick sphere reaches length " + std::to_string(n + r) +
                                    " beyond ball radius " + std::to_string(b.radius()));

  ComponentMap cm = complement_components(b, n);

  std::vector<ElementKey> candidates = b.keys_with_length_in(n + 1, n + r);
  std::vector<ElementKey> keys;
  keys.reserve(candidates.size());
  for (auto& k : candidates)
    if (cm.in_horizon(k)) keys.push_back(std::move(k));

  InducedComponents ic = induced_components(b, keys);

  ThickSphereResult out;
  out.n = n;
  out.r = r;
  out.component_count = ic.count;
  out.infinite_part_size = cm.horizon_size();
  out.horizon_component_count = cm.horizon_count();
  out.representatives.resize(static_cast<std::size_t>(ic.count));
  out.component_sizes.assign(static_cast<std::size_t>(ic.count), 0);
  std::vector<bool> seen(static_cast<std::size_t>(ic.count), false);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto id = static_cast<std::size_t>(ic.comp_of[i]);
    if (!seen[id]) {
      seen[id] = true;
      out.representatives[id] = keys[i];
    }
    out.component_sizes[id] += 1;
  }
  return out;
}

SphereScan scan_connected_spheres(const BallTable& b, int r, int n_max, int guard) {
  if (n_max < 0) fail(Errc::invalid_parameter, "n_max must be >= 0");
  SphereScan scan;
  scan.model_spec = b.model().spec();
  scan.ball_radius = b.radius();
  scan.r = r;
  scan.n_max = n_max;
  scan.guard = resolved_guard(r, guard);
  scan.all_connected = true;
  for (int n = 0; n <= n_max; ++n) {
    scan.rows.push_back(thick_sphere_components(b, n, r, scan.guard));
    if (scan.rows.back().component_count != 1 && scan.all_connected) {
      scan.all_connected = false;
      scan.first_disconnected = n;
    }
  }
  return scan;
}

RadiusSearch min_connecting_radius(const BallTable& b, int n_max, int r_cap, int guard) {
  if (r_cap < 1) fail(Errc::invalid_parameter, "r_cap must be >= 1");
  RadiusSearch out;
  out.n_max = n_max;
  out.r_cap = r_cap;
  // Feasibility of the widest scan up front, so a NotFound answer means
  // "checked everywhere", not "ran out of ball".
  int g_cap = resolved_guard(r_cap, guard);
  check_trust(b, n_max, g_cap, "min_connecting_radius");
  if (n_max + r_cap > b.radius())
    fail(Errc::guard_violation, "r_cap reaches beyond ball radius");

  for (int r = 1; r <= r_cap; ++r) {
    SphereScan scan = scan_connected_spheres(b, r, n_max, resolved_guard(r, guard));
    if (scan.all_connected) {
      out.found = r;
      return out;
    }
    int n = *scan.first_disconnected;
    out.diagnostics.push_back(RadiusSearchDiagnostic{
        r, n, scan.rows[static_cast<std::size_t>(n)].component_count});
  }
  return out;
}

SimplyConnectedCheck is_simply_connected_region(const BallTable& b, const Region& omega,
                                                int guard) {
  if (omega.empty()) fail(Errc::invalid_parameter, "region must be nonempty");
  int g = resolved_guard(0, guard);
  int max_len = 0;
  for (const ElementKey& k : omega.keys) max_len = std::max(max_len, b.length_of(k));
  check_trust(b, max_len, g, "is_simply_connected_region");

  SimplyConnectedCheck out;
  InducedComponents inner = induced_components(b, omega.keys);
  out.region_connected = inner.count == 1;

  std::vector<ElementKey> rest;
  rest.reserve(static_cast<std::size_t>(b.size() - omega.size()));
  for (const ElementKey& k : b.keys_with_length_in(0, b.radius()))
    if (!omega.contains(k)) rest.push_back(k);
  InducedComponents outer = induced_components(b, rest);
  out.complement_connected = outer.count == 1;
  return out;
}

int shell_components(const BallTable& b, const Region& omega, int r, int guard) {
  if (r < 1) fail(Errc::invalid_parameter, "dilation radius must be >= 1");
  int g = resolved_guard(r, guard);
  SimplyConnectedCheck sc = is_simply_connected_region(b, omega, g);
  if (!sc.ok())
    fail(Errc::not_simply_connected, sc.region_connected
                                         ? "complement of the region is disconnected"
                                         : "region is disconnected");
  int max_len = 0;
  for (const ElementKey& k : omega.keys) max_len = std::max(max_len, b.length_of(k));
  if (max_len + r > b.radius())
    fail(Errc::guard_violation, "dilation reaches beyond ball radius");

  // Multi-source BFS to distance r. Every vertex within distance r of omega
  // has length <= max_len + r <= N, so the dilation is exact inside the ball.
  std::unordered_map<ElementKey, int> dist;
  dist.reserve(omega.size() * 4);
  std::vector<ElementKey> frontier;
  for (const ElementKey& k : omega.keys) {
    dist.emplace(k, 0);
    frontier.push_back(k);
  }
  for (int level = 1; level <= r; ++level) {
    std::vector<ElementKey> next;
    for (const ElementKey& gkey : frontier) {
      b.for_each_neighbor(gkey, [&](const ElementKey& h, int, int) {
        if (dist.emplace(h, level).second) next.push_back(h);
      });
    }
    frontier = std::move(next);
  }

  std::vector<ElementKey> shell;
  for (const auto& [key, d] : dist)
    if (d > 0) shell.push_back(key);
  std::sort(shell.begin(), shell.end());
  return induced_components(b, shell).count;
}

EndsProfile ends_profile(const BallTable& b, int r, int n_max, int guard) {
  SphereScan scan = scan_connected_spheres(b, r, n_max, guard);
  EndsProfile out;
  out.r = r;
  out.n_max = n_max;
  out.rows = std::move(scan.rows);

  auto count_at = [&](int n) { return out.rows[static_cast<std::size_t>(n)].component_count; };
  if (n_max >= 2) {
    int a = count_at(n_max - 2), m = count_at(n_max - 1), z = count_at(n_max);
    if (a == m && m == z) {
      out.tail = EndsTail::stabilizes;
      out.stable_value = z;
    } else if (a < m && m < z) {
      out.tail = EndsTail::grows;
    } else {
      out.tail = EndsTail::inconclusive;
    }
  } else {
    bool all_equal = true;
    for (int n = 1; n <= n_max; ++n) all_equal = all_equal && count_at(n) == count_at(0);
    out.tail = all_equal ? EndsTail::stabilizes : EndsTail::inconclusive;
    if (all_equal) out.stable_value = count_at(0);
  }
  return out;
}

const char* ends_tail_name(EndsTail t) {
  switch (t) {
    case EndsTail::stabilizes: return "stabilizes";
    case EndsTail::grows: return "grows";
    case EndsTail::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace spherescope
