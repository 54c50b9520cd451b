#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "repulse/flow.hpp"
#include "support.hpp"

using namespace repulse;
namespace rt = repulse::testing;

namespace {

// Split (0) and accumulation (1) markers sorted by boundary position.
std::vector<int> boundary_sequence(const ConvexPolygon& p, const FlowDiagram& d) {
  std::vector<std::pair<double, int>> marks;
  for (const auto& s : d.split_points) marks.push_back({perimeter_coordinate(p, s.location), 0});
  for (std::size_t v : d.accumulation_points) marks.push_back({p.arc_offset(v), 1});
  std::sort(marks.begin(), marks.end());
  std::vector<int> out;
  for (const auto& m : marks) out.push_back(m.second);
  return out;
}

bool alternates(const std::vector<int>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == seq[(i + 1) % seq.size()]) return false;
  }
  return !seq.empty();
}

}  // namespace

TEST_CASE("edge regions") {
  const auto sq = rt::unit_square();
  CHECK(edge_region(sq, 0, {0.5, 0.5}) == EdgeRegion::Slab);
  CHECK(edge_region(sq, 0, {1, 0.5}) == EdgeRegion::Slab);
  const auto pent = rt::regular(5);
  const Point upper = boundary_eval(pent, {3, 0.25});
  const Point lower = boundary_eval(pent, {3, 0.75});
  CHECK(edge_region(pent, 0, upper) == EdgeRegion::Slab);
  CHECK(edge_region(pent, 1, lower) == EdgeRegion::Slab);
  CHECK_THROWS_AS(edge_region(sq, 0, {2, 2}), Error);
}

TEST_CASE("edge regions follow the foot parameter") {
  // Triangle with an obtuse apex: an actuator near v_0 projects before e_1's
  // start, which drives e_1 counterclockwise.
  const auto p = ConvexPolygon::validate({{0, 0}, {4, 0}, {1, 1}});
  const Point w{0.5, 0.2};
  CHECK(foot_parameter(p, 1, w) > 1.0);
  CHECK(edge_region(p, 1, w) == EdgeRegion::DrivesCW);
  const Point u{3.7, 0.05};
  CHECK(foot_parameter(p, 2, u) < 0.0);
  CHECK(edge_region(p, 2, u) == EdgeRegion::DrivesCCW);
}

TEST_CASE("slab membership") {
  const auto sq = rt::unit_square();
  CHECK(slab_membership(sq, {0.5, 0.5}) == std::vector<std::size_t>{0, 1, 2, 3});
  const auto pent = rt::regular(5);
  const auto m = slab_membership(pent, boundary_eval(pent, {3, 0.25}));
  CHECK(m.size() >= 2);
  CHECK(std::count(m.begin(), m.end(), 3u) == 1);
  CHECK(std::count(m.begin(), m.end(), 0u) == 1);
}

TEST_CASE("flow diagram of the square centre") {
  const auto d = flow_diagram(rt::unit_square(), {0.5, 0.5});
  REQUIRE(d.split_points.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(d.split_points[i].location.edge == i);
    CHECK(d.split_points[i].location.t == doctest::Approx(0.5));
    CHECK(d.split_points[i].semantics == SplitSemantics::TrueSplit);
    CHECK(d.flows[i].kind == FlowKind::Split);
  }
  CHECK(d.accumulation_points == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("flow diagram of a square corner") {
  const auto d = flow_diagram(rt::unit_square(), {0, 0});
  REQUIRE(d.split_points.size() == 1);
  CHECK(d.split_points[0].location == BoundaryPoint{0, 0.0});
  CHECK(d.split_points[0].semantics == SplitSemantics::AtActuator);
  CHECK(d.accumulation_points == std::vector<std::size_t>{2});
  REQUIRE(d.unstable_feet.size() == 2);
  CHECK(d.unstable_feet[0].location == BoundaryPoint{1, 0.0});
  CHECK(d.unstable_feet[1].location == BoundaryPoint{3, 0.0});
  for (const auto& f : d.unstable_feet) CHECK(f.semantics == SplitSemantics::PassThroughUnstable);
  CHECK(d.flows[0].kind == FlowKind::AllCCW);
  CHECK(d.flows[1].kind == FlowKind::AllCCW);
  CHECK(d.flows[2].kind == FlowKind::AllCW);
  CHECK(d.flows[3].kind == FlowKind::AllCW);
}

TEST_CASE("regular pentagon vertices are not witnesses") {
  const auto pent = rt::regular(5);
  for (std::size_t v = 0; v < 5; ++v) {
    CHECK(flow_diagram(pent, pent.vertex(v)).accumulation_points.size() >= 2);
    CHECK_FALSE(gather_target(pent, pent.vertex(v)));
  }
  for (std::size_t e = 0; e < 5; ++e) {
    for (int k = 0; k < 200; ++k) CHECK_FALSE(gather_target(pent, boundary_eval(pent, {e, k / 200.0})));
  }
}

TEST_CASE("gather targets on the square") {
  const auto sq = rt::unit_square();
  CHECK_FALSE(gather_target(sq, {0.5, 0.5}));
  CHECK(gather_target(sq, {0, 0}) == std::optional<std::size_t>{2});
  CHECK(gather_target(sq, {1, 1}) == std::optional<std::size_t>{0});
  CHECK_THROWS_AS(gather_target(sq, {-1, 0}), Error);
}

TEST_CASE("random flow diagrams satisfy the structural invariants") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 300; ++round) {
    const auto p = random_convex_polygon(3 + round % 10, rng);
    const Point w = round % 5 == 0 ? boundary_eval(p, rt::random_boundary(p, rng)) : rt::random_interior(p, rng);
    const auto d = flow_diagram(p, w);
    INFO("round " << round);
    CHECK(d.split_points.size() == d.accumulation_points.size());
    CHECK(alternates(boundary_sequence(p, d)));
    CHECK(d.accumulation_points == rt::oracle_accumulations(p, w));

    for (std::size_t a : d.accumulation_points) {
      const Point v = p.vertex(a);
      // The line through v perpendicular to wv supports the polygon.
      for (const Point& q : p.vertices()) CHECK(dot(q - v, v - w) <= 1e-9 * norm(v - w));
      // Strict local maximum against both incident edges.
      CHECK(distance(w, v) > distance(w, v + 1e-6 * (p.vertex(a + 1) - v)));
      CHECK(distance(w, v) > distance(w, v + 1e-6 * (p.vertex(a + p.size() - 1) - v)));
    }
    for (const auto& s : d.split_points) {
      if (s.semantics != SplitSemantics::TrueSplit || s.location.t == 0.0) continue;
      const Point at = boundary_eval(p, s.location);
      const Point dir = p.edge_vector(s.location.edge);
      CHECK(distance(w, at) <= distance(w, at + 1e-6 * dir) + 1e-15);
      CHECK(distance(w, at) <= distance(w, at - 1e-6 * dir) + 1e-15);
    }
  }
}

TEST_CASE("generic split count matches slab count") {
  std::mt19937_64 rng(22);
  int checked = 0;
  while (checked < 300) {
    const auto p = random_convex_polygon(3 + checked % 10, rng);
    const Point w = rt::random_interior(p, rng);
    if (rt::chord_distance(p, w) < 1e-6) continue;
    CHECK(flow_diagram(p, w).split_points.size() == slab_membership(p, w).size());
    CHECK(slab_membership(p, w).size() == rt::oracle_slab_count(p, w));
    ++checked;
  }
}

TEST_CASE("gather target agrees with one simulated activation") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 300; ++round) {
    const auto p = random_convex_polygon(3 + round % 10, rng);
    const Point w = round % 3 == 0 ? boundary_eval(p, rt::random_boundary(p, rng)) : rt::random_interior(p, rng);
    const auto target = gather_target(p, w);
    const auto occupied = rt::occupied_after(p, w, Seeding::vertices_only());
    CHECK(target.has_value() == (occupied.size() == 1));
    if (target && occupied.size() == 1) CHECK(distance(occupied[0], p.vertex(*target)) < 1e-12);
  }
}

TEST_CASE("actuator outside is rejected") {
  CHECK_THROWS_AS(flow_diagram(rt::unit_square(), {1.5, 0.5}), Error);
  CHECK_THROWS_AS(slab_membership(rt::unit_square(), {0.5, -0.1}), Error);
}
