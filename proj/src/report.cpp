#include "spherescope/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "spherescope/errors.hpp"

namespace spherescope {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kWitnessCap = 16;

std::string row_flags(const ThickSphereResult& row) {
  std::string flags = "horizon-limited";
  if (row.horizon_component_count > 1) flags += ";multi-horizon";
  return flags;
}

ordered_json witness_array(const BallTable& b, const std::vector<ElementKey>& reps) {
  ordered_json arr = ordered_json::array();
  std::size_t n = std::min(reps.size(), kWitnessCap);
  for (std::size_t i = 0; i < n; ++i) {
    arr.push_back(ordered_json{{"key", key_to_hex(reps[i])}, {"element", b.model().describe(reps[i])}});
  }
  return arr;
}

ordered_json scan_rows_json(const BallTable& b, const std::vector<ThickSphereResult>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json j{{"n", row.n},
                   {"r", row.r},
                   {"component_count", row.component_count},
                   {"infinite_part_size", row.infinite_part_size},
                   {"flags", row_flags(row)},
                   {"witnesses", witness_array(b, row.representatives)},
                   {"witnesses_truncated", row.representatives.size() > kWitnessCap}};
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string scan_rows_csv(const std::vector<ThickSphereResult>& rows) {
  std::ostringstream out;
  out << "n,r,component_count,infinite_part_size,flags\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.r << ',' << row.component_count << ','
        << row.infinite_part_size << ',' << row_flags(row) << '\n';
  }
  return out.str();
}

std::string ends_verdict(const EndsProfile& p) {
  switch (p.tail) {
    case EndsTail::stabilizes: return "stabilizes at " + std::to_string(p.stable_value);
    case EndsTail::grows: return "grows";
    case EndsTail::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace

std::string render_ball_csv(const BallTable& b) {
  std::ostringstream out;
  out << "n,sphere_size,ball_size\n";
  std::uint64_t total = 0;
  for (int n = 0; n <= b.radius(); ++n) {
    total += b.sphere_size(n);
    out << n << ',' << b.sphere_size(n) << ',' << total << '\n';
  }
  return out.str();
}

std::string render_ball_json(const BallTable& b) {
  ordered_json j{{"model", b.model().spec()},
                 {"name", b.model().name()},
                 {"N", b.radius()},
                 {"size", b.size()},
                 {"end_hint", end_hint_name(b.model().end_hint())}};
  j["sphere_sizes"] = b.sphere_sizes();
  return j.dump(2) + "\n";
}

std::string render_scan_csv(const BallTable& b, const SphereScan& scan) {
  (void)b;
  std::string out = scan_rows_csv(scan.rows);
  out += "# verdict: ";
  out += scan.all_connected
             ? "connected spheres at r=" + std::to_string(scan.r) + " (within horizon)"
             : "disconnected at n=" + std::to_string(*scan.first_disconnected);
  out += "\n";
  return out;
}

std::string render_scan_json(const BallTable& b, const SphereScan& scan) {
  ordered_json j{{"model", scan.model_spec},
                 {"N", scan.ball_radius},
                 {"r", scan.r},
                 {"n_max", scan.n_max},
                 {"guard", scan.guard},
                 {"flags", ordered_json::array({"horizon-limited"})}};
  j["rows"] = scan_rows_json(b, scan.rows);
  j["verdict"] = scan.all_connected
                     ? "connected spheres at r=" + std::to_string(scan.r) + " (within horizon)"
                     : "disconnected at n=" + std::to_string(*scan.first_disconnected);
  j["first_disconnected"] =
      scan.first_disconnected ? ordered_json(*scan.first_disconnected) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

std::string render_ends_csv(const BallTable& b, const EndsProfile& profile, int guard) {
  (void)b;
  (void)guard;
  std::string out = scan_rows_csv(profile.rows);
  out += "# verdict: " + ends_verdict(profile) + "\n";
  return out;
}

std::string render_ends_json(const BallTable& b, const EndsProfile& profile, int guard) {
  ordered_json j{{"model", b.model().spec()},
                 {"N", b.radius()},
                 {"r", profile.r},
                 {"n_max", profile.n_max},
                 {"guard", guard},
                 {"flags", ordered_json::array({"horizon-limited"})}};
  j["rows"] = scan_rows_json(b, profile.rows);
  ordered_json counts = ordered_json::array();
  for (const auto& row : profile.rows) counts.push_back(row.component_count);
  j["counts"] = std::move(counts);
  j["verdict"] = ends_verdict(profile);
  return j.dump(2) + "\n";
}

std::string render_census_csv(const DeadEndCensus& census) {
  std::ostringstream out;
  out << "n,dead_end_count,max_depth,max_retreat_depth,witness_key\n";
  for (const auto& row : census.rows) {
    out << row.n << ',' << row.dead_end_count << ',' << row.max_depth << ','
        << row.max_retreat_depth << ',' << key_to_hex(row.retreat_witness) << '\n';
  }
  return out.str();
}

std::string render_census_json(const BallTable& b, const DeadEndCensus& census) {
  ordered_json j{{"model", census.model_spec},
                 {"N", census.ball_radius},
                 {"n_max", census.n_max},
                 {"guard", census.guard},
                 {"flags", ordered_json::array({"horizon-limited"})}};
  ordered_json rows = ordered_json::array();
  for (const auto& row : census.rows) {
    ordered_json r{{"n", row.n},
                   {"sphere_size", row.sphere_size},
                   {"dead_end_count", row.dead_end_count},
                   {"max_depth", row.max_depth},
                   {"max_retreat_depth", row.max_retreat_depth},
                   {"horizon_limited", row.horizon_limited}};
    auto witness = [&](const ElementKey& k, bool present) -> ordered_json {
      if (!present) return nullptr;
      return ordered_json{{"key", key_to_hex(k)}, {"element", b.model().describe(k)}};
    };
    r["dead_end_witness"] = witness(row.dead_end_witness, row.dead_end_count > 0);
    r["depth_witness"] = witness(row.depth_witness, row.max_depth > 0);
    r["retreat_witness"] = witness(row.retreat_witness, row.max_retreat_depth > 0);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string render_radius_search_text(const RadiusSearch& search) {
  std::ostringstream out;
  if (search.found) {
    out << "min connecting radius r = " << *search.found << " (n <= " << search.n_max
        << ", within horizon)\n";
  } else {
    out << "no connecting radius r <= " << search.r_cap << " found for n <= " << search.n_max
        << "\n";
  }
  for (const auto& d : search.diagnostics) {
    out << "  r=" << d.r << ": disconnected at n=" << d.first_disconnected_n << " ("
        << d.component_count << " components)\n";
  }
  return out.str();
}

std::string render_radius_search_json(const BallTable& b, const RadiusSearch& search) {
  ordered_json j{{"model", b.model().spec()},
                 {"N", b.radius()},
                 {"n_max", search.n_max},
                 {"r_cap", search.r_cap},
                 {"found", search.found ? ordered_json(*search.found) : ordered_json(nullptr)}};
  ordered_json diag = ordered_json::array();
  for (const auto& d : search.diagnostics) {
    diag.push_back(ordered_json{{"r", d.r},
                                {"first_disconnected_n", d.first_disconnected_n},
                                {"component_count", d.component_count}});
  }
  j["diagnostics"] = std::move(diag);
  return j.dump(2) + "\n";
}

std::string render_theorem_summary(const TheoremReport& rep) {
  std::ostringstream out;
  out << "model: " << rep.model_name << " (" << rep.model_spec << "), ball N=" << rep.ball_radius
      << "\n";
  out << "relators:";
  for (std::size_t i = 0; i < rep.relators.size(); ++i)
    out << (i ? ", " : " ") << rep.relators[i] << " (|w|=" << rep.relator_lengths[i] << ")";
  out << "\n";
  out << "radius bound r = " << rep.radius_bound << ", scan n = 0.." << rep.n_max
      << ", guard = " << rep.guard << "\n";
  out << "thick spheres: "
      << (rep.spheres_connected
              ? std::string("all connected")
              : "disconnected at n=" + std::to_string(rep.first_disconnected))
      << "\n";
  out << "relator spans: max " << rep.max_span << " over " << rep.span_samples << " loops"
      << (rep.span_exhaustive ? " (exhaustive, base B_" : " (sampled, base B_")
      << rep.base_radius << "), bound " << rep.span_bound << (rep.span_ok ? " ok" : " VIOLATED")
      << "\n";
  out << "verdict: " << (rep.pass ? "pass" : "fail") << "\n";
  return out.str();
}

std::string render_theorem_json(const TheoremReport& rep) {
  ordered_json j{{"model", rep.model_spec},
                 {"model_name", rep.model_name},
                 {"N", rep.ball_radius},
                 {"relators", rep.relators},
                 {"relator_lengths", rep.relator_lengths},
                 {"radius_bound", rep.radius_bound},
                 {"n_max", rep.n_max},
                 {"guard", rep.guard},
                 {"component_counts", rep.component_counts},
                 {"spheres_connected", rep.spheres_connected},
                 {"first_disconnected",
                  rep.first_disconnected >= 0 ? ordered_json(rep.first_disconnected) : ordered_json(nullptr)},
                 {"span_samples", rep.span_samples},
                 {"span_exhaustive", rep.span_exhaustive},
                 {"seed", rep.seed},
                 {"base_radius", rep.base_radius},
                 {"max_span", rep.max_span},
                 {"span_bound", rep.span_bound},
                 {"per_relator_max_span", rep.per_relator_max_span},
                 {"span_ok", rep.span_ok},
                 {"flags", ordered_json::array({"horizon-limited"})},
                 {"verdict", rep.pass ? "pass" : "fail"}};
  return j.dump(2) + "\n";
}

std::string export_annulus_dot(const BallTable& b, int n, int r) {
  if (r < 1) fail(Errc::invalid_parameter, "annulus thickness must be >= 1");
  if (n < 0 || n + r > b.radius()) fail(Errc::out_of_range, "annulus bounds");

  std::vector<ElementKey> keys = b.keys_with_length_in(n + 1, n + r);
  if (keys.size() > kDotVertexCap)
    fail(Errc::size_exceeded, "annulus has " + std::to_string(keys.size()) +
                                  " vertices; DOT export caps at " + std::to_string(kDotVertexCap));

  ComponentMap cm = complement_components(b, n);
  std::unordered_map<ElementKey, std::size_t> index;
  index.reserve(keys.size() * 2);
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);

  std::ostringstream out;
  out << "graph annulus {\n";
  out << "  // model " << b.model().spec() << ", n=" << n << ", r=" << r << ", N=" << b.radius()
      << "\n";
  for (std::size_t i = 0; i < keys.size(); ++i) {
    out << "  v" << i << " [label=\"" << b.model().describe(keys[i])
        << " len=" << b.length_of(keys[i]) << " comp=" << cm.component_id(keys[i]) << "\"];\n";
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::vector<std::size_t> nbrs;
    b.for_each_neighbor(keys[i], [&](const ElementKey& h, int, int) {
      auto it = index.find(h);
      if (it != index.end() && it->second > i) nbrs.push_back(it->second);
    });
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    for (std::size_t j : nbrs) out << "  v" << i << " -- v" << j << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace spherescope
