#pragma once

#include <optional>
#include <vector>

#include "repulse/geometry.hpp"

namespace repulse {

// Effect of an activation at w on the particles of one edge.
enum class EdgeRegion { DrivesCW, DrivesCCW, Slab };

enum class FlowKind { AllCCW, AllCW, Split };

struct EdgeFlow {
  FlowKind kind = FlowKind::AllCCW;
  double split_t = 0.0;  // only meaningful for FlowKind::Split
};

enum class SplitSemantics { TrueSplit, PassThroughUnstable, AtActuator };

struct SplitPoint {
  BoundaryPoint location;
  SplitSemantics semantics = SplitSemantics::TrueSplit;
};

struct FlowDiagram {
  Point actuator;
  std::vector<EdgeFlow> flows;
  // Points where the boundary flow diverges, in ccw order from v_0. Holds
  // only TrueSplit and AtActuator entries.
  std::vector<SplitPoint> split_points;
  // Perpendicular feet landing on a vertex that particles pass through.
  std::vector<SplitPoint> unstable_feet;
  // Vertices where particles come to rest, in ccw order.
  std::vector<std::size_t> accumulation_points;
};

const char* to_string(EdgeRegion region);
const char* to_string(SplitSemantics semantics);

// Throws Error(InvalidInput) when w is not in the polygon.
void require_inside(const ConvexPolygon& polygon, Point w, const Tolerance& tol);

EdgeRegion edge_region(const ConvexPolygon& polygon, std::size_t i, Point w, const Tolerance& tol = {});

// Edges whose closed slab contains w, ascending.
std::vector<std::size_t> slab_membership(const ConvexPolygon& polygon, Point w, const Tolerance& tol = {});

FlowDiagram flow_diagram(const ConvexPolygon& polygon, Point w, const Tolerance& tol = {});

// The vertex every particle reaches under one activation at w, if there is
// exactly one accumulation point.
std::optional<std::size_t> gather_target(const ConvexPolygon& polygon, Point w, const Tolerance& tol = {});

}  // namespace repulse
