#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repulse/io.hpp"
#include "repulse/svg.hpp"
#include "support.hpp"

using namespace repulse;
namespace rt = repulse::testing;

TEST_CASE("numbers round-trip through text") {
  for (double v : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 1e-300, 123456789.123}) {
    CHECK(std::stod(format_number(v)) == v);
  }
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(-0.0) == "0");
}

TEST_CASE("polygon text parsing") {
  const auto p = parse_polygon("# square\n0 0\n1 0   # corner\n\n1 1\n0 1\n");
  CHECK(p == rt::unit_square());
  try {
    parse_polygon("0 0\n1 0\n1 x\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_polygon("0 0 0\n"), Error);
  CHECK_THROWS_AS(parse_polygon("0 0\n0 1\n1 1\n1 0\n"), Error);
}

TEST_CASE("polygons round-trip exactly") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 50; ++round) {
    const auto p = random_convex_polygon(3 + round % 10, rng);
    CHECK(parse_polygon(format_polygon(p.vertices())) == p);
  }
}

TEST_CASE("plans round-trip") {
  for (const auto& p : {rt::equilateral(), rt::unit_square(), rt::regular(5)}) {
    const GatherPlan plan = plan_gather(p);
    const GatherPlan back = parse_plan(format_plan(plan));
    CHECK(back.verdict == plan.verdict);
    CHECK(back.activations == plan.activations);
    CHECK(back.predicted_gather == plan.predicted_gather);
    CHECK(back.rationale == plan.rationale);
  }
  CHECK(format_plan(plan_gather(rt::equilateral())) == "verdict ungatherable\nrationale none\n");
  CHECK_THROWS_AS(parse_plan("activation 0 0\n"), Error);
  CHECK_THROWS_AS(parse_plan("verdict maybe\n"), Error);
}

TEST_CASE("flow and map text") {
  const auto sq = rt::unit_square();
  const std::string flow = format_flow(sq, flow_diagram(sq, {0, 0}));
  CHECK(flow.find("split 0 0 0 0 at-actuator") != std::string::npos);
  CHECK(flow.find("accumulation 2 1 1") != std::string::npos);
  CHECK(format_accumulation_map(accumulation_map(sq, Direction::CCW)).find(" 2\n") != std::string::npos);
}

TEST_CASE("svg output carries the documented classes") {
  const auto pent = rt::regular(5);
  const std::string flow = svg_flow(pent, flow_diagram(pent, {0, 1}));
  for (const char* cls : {"class=\"polygon\"", "class=\"flow-arrow\"", "class=\"split-point\"",
                          "class=\"accumulation-point\"", "class=\"actuator\"", "scale(1,-1)"}) {
    CHECK(flow.find(cls) != std::string::npos);
  }
  const auto d = build_decomposition(pent);
  const std::string cells = svg_decomposition(pent, d, repulsion_kernel(pent, d));
  CHECK(cells.find("class=\"cell\"") != std::string::npos);
  CHECK(cells.find("class=\"chord\"") != std::string::npos);
  const auto plan = plan_gather(pent);
  const std::string trace = svg_trace(pent, simulate_plan(pent, plan, Seeding::vertices_only()));
  CHECK(trace.find("class=\"trace-path\"") != std::string::npos);
  CHECK(trace.find("class=\"particle\"") != std::string::npos);
  CHECK(svg_flow(pent, flow_diagram(pent, {0, 1})) == flow);
}
