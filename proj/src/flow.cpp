#include "repulse/flow.hpp"

namespace repulse {

const char* to_string(EdgeRegion region) {
  switch (region) {
    case EdgeRegion::DrivesCW: return "cw";
    case EdgeRegion::DrivesCCW: return "ccw";
    case EdgeRegion::Slab: return "slab";
  }
  return "?";
}

const char* to_string(SplitSemantics semantics) {
  switch (semantics) {
    case SplitSemantics::TrueSplit: return "true-split";
    case SplitSemantics::PassThroughUnstable: return "pass-through";
    case SplitSemantics::AtActuator: return "at-actuator";
  }
  return "?";
}

void require_inside(const ConvexPolygon& polygon, Point w, const Tolerance& tol) {
  if (!polygon.contains(w, tol)) {
    throw Error(ErrorKind::InvalidInput, "actuator lies outside the polygon");
  }
}

EdgeRegion edge_region(const ConvexPolygon& polygon, std::size_t i, Point w, const Tolerance& tol) {
  require_inside(polygon, w, tol);
  const double t = foot_parameter(polygon, i, w, tol);
  if (t < 0.0) return EdgeRegion::DrivesCCW;
  if (t > 1.0) return EdgeRegion::DrivesCW;
  return EdgeRegion::Slab;
}

std::vector<std::size_t> slab_membership(const ConvexPolygon& polygon, Point w, const Tolerance& tol) {
  require_inside(polygon, w, tol);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const double t = foot_parameter(polygon, i, w, tol);
    if (t >= 0.0 && t <= 1.0) out.push_back(i);
  }
  return out;
}

// Along e_i the squared distance to w is a parabola in t with its minimum at
// the foot parameter. Walking the boundary ccw, each edge contributes a sign
// pattern: "+" (AllCCW), "-" (AllCW) or "-+" (Split). Accumulation points
// are the "+-" transitions at vertices, split points the "-+" transitions,
// so the two alternate by construction.
FlowDiagram flow_diagram(const ConvexPolygon& polygon, Point w, const Tolerance& tol) {
  require_inside(polygon, w, tol);
  const std::size_t n = polygon.size();
  std::vector<double> feet(n);
  for (std::size_t i = 0; i < n; ++i) feet[i] = foot_parameter(polygon, i, w, tol);

  FlowDiagram out;
  out.actuator = w;
  out.flows.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (feet[i] <= 0.0) {
      out.flows[i] = {FlowKind::AllCCW, 0.0};
    } else if (feet[i] >= 1.0) {
      out.flows[i] = {FlowKind::AllCW, 0.0};
    } else {
      out.flows[i] = {FlowKind::Split, feet[i]};
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t before = polygon.prev(i);
    const bool arrives_ccw = feet[before] < 1.0;  // flow on e_{i-1} ends moving into v_i
    const bool leaves_cw = feet[i] > 0.0;         // flow on e_i starts moving back into v_i
    if (arrives_ccw && leaves_cw) {
      out.accumulation_points.push_back(i);
    } else if (!arrives_ccw && !leaves_cw) {
      const bool at_actuator = distance(w, polygon.vertex(i)) <= tol.abs;
      out.split_points.push_back(
          {{i, 0.0}, at_actuator ? SplitSemantics::AtActuator : SplitSemantics::TrueSplit});
    } else if (feet[before] == 1.0 || feet[i] == 0.0) {
      out.unstable_feet.push_back({{i, 0.0}, SplitSemantics::PassThroughUnstable});
    }
    if (out.flows[i].kind == FlowKind::Split) {
      const BoundaryPoint at{i, feet[i]};
      const bool at_actuator = distance(w, boundary_eval(polygon, at)) <= tol.abs;
      out.split_points.push_back(
          {at, at_actuator ? SplitSemantics::AtActuator : SplitSemantics::TrueSplit});
    }
  }

  if (out.accumulation_points.empty() ||
      out.accumulation_points.size() != out.split_points.size()) {
    throw Error(ErrorKind::Internal, "flow diagram violates split/accumulation alternation");
  }
  return out;
}

std::optional<std::size_t> gather_target(const ConvexPolygon& polygon, Point w, const Tolerance& tol) {
  const FlowDiagram diagram = flow_diagram(polygon, w, tol);
  if (diagram.accumulation_points.size() != 1) return std::nullopt;
  return diagram.accumulation_points.front();
}

}  // namespace repulse
