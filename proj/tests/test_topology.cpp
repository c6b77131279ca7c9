#include <doctest.h>

#include <map>

#include "spherescope/topology.hpp"
#include "support/oracle.hpp"
#include "support/util.hpp"

using namespace spherescope;
using testutil::code_of;
using testutil::trace_gens;

namespace {

// Partition + classification agreement with the flood-fill oracle on the
// annulus inner < |g| <= 6.
void check_against_oracle(const BallTable& b, const oracle::OracleData& data, int inner) {
  ComponentMap cm = complement_components(b, inner);
  oracle::OracleComponents oc = oracle::flood_fill_components(data, inner + 1, data.radius);

  REQUIRE(cm.component_count() == static_cast<int>(oc.components.size()));
  std::map<int, int> fwd, bwd;
  for (const auto& [key, oid] : oc.comp_of) {
    int lid = cm.component_id(key);
    auto f = fwd.emplace(lid, oid);
    CHECK(f.first->second == oid);
    auto g = bwd.emplace(oid, lid);
    CHECK(g.first->second == lid);
    CHECK(cm.in_horizon(key) == oc.components[static_cast<std::size_t>(oid)].horizon);
  }
  for (auto [lid, oid] : fwd) {
    const ComponentInfo& a = cm.components()[static_cast<std::size_t>(lid)];
    const oracle::OracleComponent& o = oc.components[static_cast<std::size_t>(oid)];
    CHECK(a.min_key == o.min_key);
    CHECK(a.size == static_cast<std::uint64_t>(o.size));
    CHECK(a.min_length == o.min_length);
    CHECK((a.cls == ComponentClass::horizon) == o.horizon);
  }
}

}  // namespace

TEST_CASE("complement components: two rays of Z") {
  BallTable b = build_ball(make_model("z"), 12);
  ComponentMap cm = complement_components(b, 4);
  CHECK(cm.component_count() == 2);
  CHECK(cm.horizon_count() == 2);
  CHECK(cm.enclosed_count() == 0);
  CHECK(cm.components()[0].size == 8);
  CHECK(cm.components()[1].size == 8);
}

TEST_CASE("complement components: free group branches") {
  BallTable b = build_ball(make_model("free:2"), 8);
  // one component per sphere-(n+1) vertex in a tree
  CHECK(complement_components(b, 1).component_count() == 12);
  ComponentMap cm = complement_components(b, 2);
  CHECK(cm.component_count() == 36);
  CHECK(cm.horizon_count() == 36);
}

TEST_CASE("complement components: Z^2 annulus is one horizon piece") {
  BallTable b = build_ball(make_model("zd:2"), 12);
  ComponentMap cm = complement_components(b, 4);
  CHECK(cm.component_count() == 1);
  CHECK(cm.horizon_count() == 1);
  CHECK(cm.components()[0].min_length == 5);
  CHECK(code_of([&] { complement_components(b, 12); }) == Errc::out_of_range);
  CHECK(code_of([&] { complement_components(b, -1); }) == Errc::out_of_range);
}

TEST_CASE("no enclosed component touches the horizon sphere") {
  for (const char* spec : {"z", "zd:2", "heisenberg:xyz", "lamplighter2", "zwrz", "free:2"}) {
    BallTable b = build_ball(make_model(spec), 6);
    for (int n = 0; n < 6; ++n) {
      ComponentMap cm = complement_components(b, n);
      for (const ElementKey& k : b.keys_at(6)) CHECK(cm.in_horizon(k));
    }
  }
}

TEST_CASE("infinite_part") {
  BallTable b = build_ball(make_model("zd:2"), 12);
  Region inf = infinite_part(b, 4);
  CHECK(inf.size() == 272);  // |B_12| - |B_4| = 313 - 41
  CHECK(inf.size() == b.ball_size(12) - b.ball_size(4));

  BallTable zb = build_ball(make_model("z"), 12);
  Region zinf = infinite_part(zb, 4);
  CHECK(zinf.size() == 16);  // both rays, 8 vertices each

  CHECK(code_of([&] { infinite_part(b, 9); }) == Errc::guard_violation);  // n > N - 4
  CHECK_NOTHROW(infinite_part(b, 9, 3));
}

TEST_CASE("lamplighter pockets are excluded from the infinite part") {
  BallTable b = build_ball(make_model("lamplighter2"), 13);
  ComponentMap cm = complement_components(b, 6);
  CHECK(cm.enclosed_count() >= 1);
  Region inf = infinite_part(b, 6);
  CHECK(inf.size() == cm.horizon_size());
  CHECK(inf.size() < b.ball_size(13) - b.ball_size(6));

  // lamps {-1,0,1} with the head home: all neighbours are shorter, so it is
  // stranded in a finite pocket of the complement of B_6
  ElementKey g = trace_gens(b.model(), {0, 1, 0, 2, 2, 0, 1});
  CHECK(cm.contains(g));
  CHECK_FALSE(cm.in_horizon(g));
  CHECK_FALSE(inf.contains(g));
}

TEST_CASE("thick spheres") {
  BallTable b = build_ball(make_model("zd:2"), 12);
  // single spheres of Z^2 are independent sets (every edge flips parity)
  ThickSphereResult one = thick_sphere_components(b, 5, 1);
  CHECK(one.component_count == 24);
  CHECK(one.component_sizes.size() == 24);
  ThickSphereResult two = thick_sphere_components(b, 5, 2);
  CHECK(two.component_count == 1);
  CHECK(two.component_sizes[0] == b.sphere_size(6) + b.sphere_size(7));

  BallTable zb = build_ball(make_model("z"), 12);
  CHECK(thick_sphere_components(zb, 5, 1).component_count == 2);

  BallTable fb = build_ball(make_model("free:2"), 8);
  CHECK(thick_sphere_components(fb, 3, 1).component_count == 108);
}

TEST_CASE("thick sphere guard checks") {
  BallTable b = build_ball(make_model("zd:2"), 12);
  CHECK(code_of([&] { thick_sphere_components(b, 9, 1); }) == Errc::guard_violation);
  CHECK_NOTHROW(thick_sphere_components(b, 9, 1, 3));
  CHECK(code_of([&] { thick_sphere_components(b, 8, 5, 4); }) == Errc::guard_violation);
  CHECK(code_of([&] { thick_sphere_components(b, 3, 0); }) == Errc::invalid_parameter);
}

TEST_CASE("thick sphere representatives are deterministic and ordered") {
  BallTable b = build_ball(make_model("z"), 12);
  ThickSphereResult res = thick_sphere_components(b, 5, 1);
  REQUIRE(res.representatives.size() == 2);
  CHECK(res.representatives[0] < res.representatives[1]);
  ThickSphereResult res2 = thick_sphere_components(b, 5, 1);
  CHECK(res.representatives == res2.representatives);
}

TEST_CASE("scan: Z^2 connects at r=2 but not r=1") {
  BallTable b = build_ball(make_model("zd:2"), 14);
  SphereScan s1 = scan_connected_spheres(b, 1, 8);
  CHECK_FALSE(s1.all_connected);
  CHECK(*s1.first_disconnected == 0);
  for (int n = 0; n <= 8; ++n)
    CHECK(s1.rows[static_cast<std::size_t>(n)].component_count == 4 * (n + 1));

  SphereScan s2 = scan_connected_spheres(b, 2, 8);
  CHECK(s2.all_connected);
  SphereScan s3 = scan_connected_spheres(b, 3, 8, 4);
  CHECK(s3.all_connected);
}

TEST_CASE("scan: Heisenberg at the relator bound") {
  BallTable b = build_ball(make_model("heisenberg:xyz"), 10);
  SphereScan scan = scan_connected_spheres(b, 3, 5, 4);
  CHECK(scan.all_connected);
  for (const auto& row : scan.rows) CHECK(row.component_count == 1);
}

TEST_CASE("scan: lamplighter spheres shatter at r=2") {
  BallTable b = build_ball(make_model("lamplighter2"), 12);
  SphereScan scan = scan_connected_spheres(b, 2, 8, 4);
  CHECK_FALSE(scan.all_connected);
  CHECK(*scan.first_disconnected == 0);
  std::vector<int> counts;
  for (const auto& row : scan.rows) counts.push_back(row.component_count);
  CHECK(counts == std::vector<int>{3, 6, 10, 20, 33, 59, 100, 170, 287});
}

TEST_CASE("min connecting radius") {
  BallTable b = build_ball(make_model("zd:2"), 14);
  RadiusSearch found = min_connecting_radius(b, 8, 3, 4);
  REQUIRE(found.found.has_value());
  CHECK(*found.found == 2);
  REQUIRE(found.diagnostics.size() == 1);
  CHECK(found.diagnostics[0].r == 1);
  CHECK(found.diagnostics[0].first_disconnected_n == 0);
  CHECK(found.diagnostics[0].component_count == 4);

  BallTable hb = build_ball(make_model("heisenberg:xyz"), 12);
  RadiusSearch hfound = min_connecting_radius(hb, 6, 4, 4);
  REQUIRE(hfound.found.has_value());
  CHECK(*hfound.found == 2);
  CHECK(*hfound.found <= 3);  // within the relator bound

  BallTable zb = build_ball(make_model("z"), 14);
  RadiusSearch none = min_connecting_radius(zb, 8, 4, 4);
  CHECK_FALSE(none.found.has_value());
  CHECK(none.diagnostics.size() == 4);
  for (const auto& d : none.diagnostics) CHECK(d.component_count == 2);
}

TEST_CASE("simply connected regions") {
  BallTable b = build_ball(make_model("zd:2"), 14);
  auto m = b.model_ptr();

  CHECK(is_simply_connected_region(b, Region::ball(b, 3)).ok());

  Region two = Region::of({m->identity(), trace_gens(*m, {0, 0, 0, 0, 0, 2, 2, 2, 2, 2})});
  SimplyConnectedCheck sc = is_simply_connected_region(b, two);
  CHECK_FALSE(sc.region_connected);
  CHECK_FALSE(sc.ok());

  Region ring = Region::annulus(b, 2, 5);  // complement splits into B_2 and the outside
  SimplyConnectedCheck rc = is_simply_connected_region(b, ring);
  CHECK(rc.region_connected);
  CHECK_FALSE(rc.complement_connected);

  CHECK(code_of([&] { is_simply_connected_region(b, Region::of({})); }) ==
        Errc::invalid_parameter);
  CHECK(code_of([&] { is_simply_connected_region(b, Region::ball(b, 13)); }) ==
        Errc::guard_violation);
}

TEST_CASE("shell components") {
  BallTable b = build_ball(make_model("zd:2"), 12);
  CHECK(shell_components(b, Region::ball(b, 3), 3) == 1);
  Region id = Region::of({b.model().identity()});
  CHECK(shell_components(b, id, 3) == 1);
  CHECK(shell_components(b, id, 1) == 4);  // the four unit vectors are pairwise non-adjacent
  CHECK(code_of([&] { shell_components(b, Region::annulus(b, 2, 5), 2); }) ==
        Errc::not_simply_connected);
}

TEST_CASE("ends profiles") {
  BallTable zb = build_ball(make_model("z"), 12);
  EndsProfile ze = ends_profile(zb, 1, 8);
  CHECK(ze.tail == EndsTail::stabilizes);
  CHECK(ze.stable_value == 2);
  for (const auto& row : ze.rows) CHECK(row.component_count == 2);

  BallTable fb = build_ball(make_model("free:2"), 10);
  EndsProfile fe = ends_profile(fb, 1, 5);
  CHECK(fe.tail == EndsTail::grows);
  for (int n = 0; n <= 5; ++n) {
    int expected = 4;
    for (int i = 0; i < n; ++i) expected *= 3;
    CHECK(fe.rows[static_cast<std::size_t>(n)].component_count == expected);
  }

  BallTable b2 = build_ball(make_model("zd:2"), 14);
  EndsProfile e2 = ends_profile(b2, 2, 10);
  CHECK(e2.tail == EndsTail::stabilizes);
  CHECK(e2.stable_value == 1);
  EndsProfile e1 = ends_profile(b2, 1, 8);
  CHECK(e1.tail == EndsTail::grows);  // counts 4(n+1): r=1 is below the connecting radius
}

TEST_CASE("thick sphere nesting in r") {
  BallTable b = build_ball(make_model("lamplighter2"), 12);
  ComponentMap cm = complement_components(b, 4);
  std::uint64_t prev = 0;
  for (int r = 1; r <= 4; ++r) {
    std::uint64_t size = 0;
    for (const ElementKey& k : b.keys_with_length_in(5, 4 + r))
      if (cm.in_horizon(k)) ++size;
    CHECK(size >= prev);
    prev = size;
    ThickSphereResult res = thick_sphere_components(b, 4, r, 4);
    std::uint64_t total = 0;
    for (auto s : res.component_sizes) total += s;
    CHECK(total == size);
  }
}

TEST_CASE("horizon classification is stable under ball growth") {
  for (const char* spec : {"zd:2", "lamplighter2"}) {
    BallTable small = build_ball(make_model(spec), 10);
    BallTable big = build_ball(make_model(spec), 12);
    for (int n = 0; n <= 6; ++n) {
      ComponentMap a = complement_components(small, n);
      ComponentMap c = complement_components(big, n);
      CHECK(a.component_count() == c.component_count());
      std::map<int, int> fwd, bwd;
      for (const ElementKey& k : small.keys_with_length_in(n + 1, 10)) {
        int ia = a.component_id(k), ic = c.component_id(k);
        auto f = fwd.emplace(ia, ic);
        CHECK(f.first->second == ic);
        auto g = bwd.emplace(ic, ia);
        CHECK(g.first->second == ia);
      }
      for (auto [ia, ic] : fwd)
        CHECK(a.components()[static_cast<std::size_t>(ia)].cls ==
              c.components()[static_cast<std::size_t>(ic)].cls);
    }
  }
}

TEST_CASE("theorem consistency: connected at the relator-bound radius") {
  // one-ended finitely presented models scanned at r = floor(max|w|/2) + 1
  BallTable b2 = build_ball(make_model("zd:2"), 12);
  CHECK(scan_connected_spheres(b2, 3, 6, 4).all_connected);
  BallTable hb = build_ball(make_model("heisenberg:xyz"), 11);
  CHECK(scan_connected_spheres(hb, 3, 6, 4).all_connected);
}

TEST_CASE("components match the flood-fill oracle on B_6") {
  for (const char* spec : {"zd:2", "lamplighter2", "heisenberg:xy"}) {
    auto m = make_model(spec);
    BallTable b = build_ball(m, 6);
    oracle::OracleData data = oracle::enumerate_ball(*m, 6);
    for (int inner = 0; inner < 6; ++inner) check_against_oracle(b, data, inner);
  }
}
