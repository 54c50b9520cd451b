#pragma once

#include <optional>
#include <vector>

#include "repulse/geometry.hpp"

namespace repulse {

enum class Direction { CCW, CW };

const char* to_string(Direction direction);

// A boundary arc with constant first accumulation vertex. Arcs of a CCW map
// are closed at `start` and open at `end`; arcs of a CW map are open at
// `start` and closed at `end`. Either way `start` precedes `end` ccw.
struct AccumulationArc {
  BoundaryPoint start;
  BoundaryPoint end;
  std::size_t vertex = 0;
};

// For every boundary point x: the vertex where a particle displaced from x
// in `direction` comes to rest under an actuator at x.
struct AccumulationMap {
  Direction direction = Direction::CCW;
  std::vector<AccumulationArc> arcs;  // ccw order, partitioning the boundary
  std::size_t events = 0;             // caliper steps taken by the sweep

  std::size_t at(const BoundaryPoint& x) const;
};

AccumulationMap accumulation_map(const ConvexPolygon& polygon, Direction direction,
                                 const Tolerance& tol = {});

// Direct O(n) walk from a single boundary point; same semantics as the map.
std::size_t first_accumulation(const ConvexPolygon& polygon, const BoundaryPoint& x, Direction direction,
                               const Tolerance& tol = {});

struct GatherWitness {
  BoundaryPoint location;
  std::size_t gather_vertex = 0;
};

// A boundary point from which one activation gathers every particle, or
// nothing when the polygon is not 1-gatherable.
std::optional<GatherWitness> find_gather_point(const ConvexPolygon& polygon, const Tolerance& tol = {});

}  // namespace repulse
