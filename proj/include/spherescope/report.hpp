#pragma once

#include <iosfwd>
#include <string>

#include "spherescope/depth.hpp"
#include "spherescope/theorem.hpp"
#include "spherescope/topology.hpp"

// Deterministic report rendering: identical inputs produce byte-identical
// output. Rows are ordered by n, witnesses by canonical key; keys appear as
// lowercase hex, JSON additionally carries human-readable normal forms.

namespace spherescope {

std::string render_ball_csv(const BallTable& b);
std::string render_ball_json(const BallTable& b);

std::string render_scan_csv(const BallTable& b, const SphereScan& scan);
std::string render_scan_json(const BallTable& b, const SphereScan& scan);

std::string render_ends_csv(const BallTable& b, const EndsProfile& profile, int guard);
std::string render_ends_json(const BallTable& b, const EndsProfile& profile, int guard);

std::string render_census_csv(const DeadEndCensus& census);
std::string render_census_json(const BallTable& b, const DeadEndCensus& census);

std::string render_radius_search_text(const RadiusSearch& search);
std::string render_radius_search_json(const BallTable& b, const RadiusSearch& search);

std::string render_theorem_summary(const TheoremReport& rep);
std::string render_theorem_json(const TheoremReport& rep);

inline constexpr std::size_t kDotVertexCap = 20'000;

// DOT graph of the annulus n < |g| <= n+r, nodes annotated with length and
// the id of their component in the complement of B_n.
std::string export_annulus_dot(const BallTable& b, int n, int r);

}  // namespace spherescope
