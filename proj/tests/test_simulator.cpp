#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "repulse/planner.hpp"
#include "repulse/simulator.hpp"
#include "support.hpp"

using namespace repulse;
namespace rt = repulse::testing;

namespace {

std::set<std::pair<double, double>> as_set(const std::vector<Point>& pts) {
  std::set<std::pair<double, double>> out;
  for (const Point& p : pts) out.insert({p.x, p.y});
  return out;
}

}  // namespace

TEST_CASE("initial particle counts") {
  CHECK(initial_particles(rt::unit_square(), Seeding::vertices_only()).particles.size() == 4);
  CHECK(initial_particles(rt::unit_square(), Seeding::boundary_sampled(1)).particles.size() == 8);
  CHECK(initial_particles(rt::equilateral(), Seeding::vertices_only()).particles.size() == 3);
}

TEST_CASE("radial move onto a flat point continues ccw") {
  const auto trace = repel_particle(rt::unit_square(), {0.5, 0.5}, Point{0.5, 0.25});
  CHECK(trace.rest == BoundaryPoint{1, 0.0});
  REQUIRE(trace.events.size() >= 4);
  CHECK(trace.events[1].kind == TraceEventKind::Radial);
  CHECK(trace.events[1].at.x == doctest::Approx(0.5));
  CHECK(trace.events[1].at.y == doctest::Approx(0.0));
  CHECK(trace.events[2].kind == TraceEventKind::PassThrough);
  CHECK(trace.events.back().kind == TraceEventKind::Rest);
}

TEST_CASE("radial move off the split walks away from it") {
  const auto trace = repel_particle(rt::unit_square(), {0.5, 0.5}, Point{0.6, 0.25});
  CHECK(trace.events[1].at.x == doctest::Approx(0.7));
  CHECK(trace.events[1].at.y == doctest::Approx(0.0).scale(1));
  CHECK(trace.rest == BoundaryPoint{1, 0.0});
  const auto left = repel_particle(rt::unit_square(), {0.5, 0.5}, Point{0.4, 0.25});
  CHECK(left.rest == BoundaryPoint{0, 0.0});
}

TEST_CASE("a particle on an accumulation vertex stays") {
  const auto trace = repel_particle(rt::unit_square(), {0.5, 0.5}, BoundaryPoint{2, 0.0});
  CHECK(trace.rest == BoundaryPoint{2, 0.0});
  CHECK(trace.events.size() == 2);
}

TEST_CASE("a particle on the actuator is invalid") {
  CHECK_THROWS_AS(repel_particle(rt::unit_square(), {0.5, 0.5}, Point{0.5, 0.5}), Error);
}

TEST_CASE("activation outcomes on the fixtures") {
  const auto sq = rt::unit_square();
  const auto centre = simulate_activation(sq, {0.5, 0.5}, initial_particles(sq, Seeding::vertices_only()), true);
  CHECK(centre.system.particles.size() == 4);

  const auto corner = simulate_activation(sq, {0, 0}, initial_particles(sq, Seeding::vertices_only()), true);
  REQUIRE(corner.system.particles.size() == 1);
  CHECK(corner.system.particles[0].weight == 3);
  CHECK(std::get<BoundaryPoint>(corner.system.particles[0].position) == BoundaryPoint{2, 0.0});

  const auto tri = rt::equilateral();
  std::mt19937_64 rng(51);
  for (int i = 0; i < 50; ++i) {
    const Point w = rt::random_interior(tri, rng);
    const auto step = simulate_activation(tri, w, initial_particles(tri, Seeding::vertices_only()), true);
    REQUIRE(step.system.particles.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(std::get<BoundaryPoint>(step.system.particles[k].position) == BoundaryPoint{k, 0.0});
    }
  }
}

TEST_CASE("later actuators must land on empty points") {
  const auto sq = rt::unit_square();
  const std::vector<Point> acts{{0.5, 0.5}, {1, 1}};
  CHECK_THROWS_AS(simulate_sequence(sq, acts, Seeding::vertices_only()), Error);
  try {
    simulate_sequence(sq, acts, Seeding::vertices_only());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ActuatorOnParticle);
  }
}

TEST_CASE("plans on the fixtures") {
  const auto sq = rt::unit_square();
  GatherPlan corner;
  corner.verdict = Verdict::OneActivation;
  corner.activations = {{0, 0}};
  const auto out = simulate_plan(sq, corner, Seeding::vertices_only());
  REQUIRE(out.gathered);
  CHECK(*out.gather_point == Point{1, 1});

  GatherPlan synthetic;
  synthetic.activations = {{0.5, 0.2}, {0.4, 0.3}};
  const auto tri = simulate_plan(rt::equilateral(), synthetic, Seeding::vertices_only());
  CHECK_FALSE(tri.gathered);
  CHECK(tri.occupied.size() == 3);

  CHECK_THROWS_AS(simulate_plan(sq, GatherPlan{}, Seeding::vertices_only()), Error);
}

TEST_CASE("traces never approach the actuator") {
  std::mt19937_64 rng(52);
  for (int round = 0; round < 200; ++round) {
    const auto p = random_convex_polygon(3 + round % 10, rng);
    const Point w = rt::random_interior(p, rng);
    for (int k = 0; k < 10; ++k) {
      const ParticlePosition start = k % 2 ? ParticlePosition{rt::random_interior(p, rng)}
                                           : ParticlePosition{rt::random_boundary(p, rng)};
      const auto trace = repel_particle(p, w, start);
      for (std::size_t e = 1; e < trace.events.size(); ++e) {
        CHECK(distance(w, trace.events[e].at) >= distance(w, trace.events[e - 1].at) - 1e-12);
      }
    }
  }
}

TEST_CASE("vertex particles occupy exactly the accumulation points") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 200; ++round) {
    const auto p = random_convex_polygon(3 + round % 10, rng);
    const Point w = rt::random_interior(p, rng);
    const auto occupied = rt::occupied_after(p, w, Seeding::vertices_only());
    std::vector<Point> expected;
    for (std::size_t v : rt::oracle_accumulations(p, w)) expected.push_back(p.vertex(v));
    CHECK(as_set(occupied) == as_set(expected));
  }
}

TEST_CASE("boundary seeding does not change the outcome") {
  std::mt19937_64 rng(54);
  for (int round = 0; round < 100; ++round) {
    const auto p = random_convex_polygon(3 + round % 10, rng);
    const Point w = round % 4 ? rt::random_interior(p, rng) : boundary_eval(p, rt::random_boundary(p, rng));
    const auto base = as_set(rt::occupied_after(p, w, Seeding::vertices_only()));
    for (std::size_t k : {1u, 4u, 16u}) CHECK(as_set(rt::occupied_after(p, w, Seeding::boundary_sampled(k))) == base);
  }
}

TEST_CASE("trace log lines") {
  const std::vector<Point> act{{0, 0}};
  const auto out = simulate_sequence(rt::unit_square(), act, Seeding::vertices_only());
  std::ostringstream log;
  write_trace_log(log, out);
  std::istringstream in(log.str());
  std::string line;
  int events = 0;
  while (std::getline(in, line)) {
    if (line.rfind('#', 0) == 0) continue;
    std::istringstream fields(line);
    std::size_t id;
    std::string kind;
    double x, y;
    REQUIRE(static_cast<bool>(fields >> id >> kind >> x >> y));
    CHECK((kind == "start" || kind == "radial" || kind == "walk" || kind == "pass" || kind == "rest"));
    ++events;
  }
  CHECK(events > 0);
}
