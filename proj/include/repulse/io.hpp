#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "repulse/flow.hpp"
#include "repulse/geometry.hpp"
#include "repulse/kernel.hpp"
#include "repulse/linear_gather.hpp"
#include "repulse/planner.hpp"

namespace repulse {

// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

// `x y` per line, `#` starts a comment, blank lines ignored. Throws
// Error(Parse) naming the offending line.
std::vector<Point> parse_points(std::string_view text);
ConvexPolygon parse_polygon(std::string_view text, const Tolerance& tol = {});
ConvexPolygon read_polygon_file(const std::string& path, const Tolerance& tol = {});
std::string format_polygon(std::span<const Point> vertices);

// verdict <ungatherable|one|two>
// activation x y        (0 to 2 lines, in order)
// gather v              (optional)
// rationale <none|witness|diameter|triangle>
std::string format_plan(const GatherPlan& plan);
GatherPlan parse_plan(std::string_view text);

std::string format_flow(const ConvexPolygon& polygon, const FlowDiagram& diagram);

// One line per arc: `edge t_start edge t_end vertex`.
std::string format_accumulation_map(const AccumulationMap& map);

// Kernel cells as polygon blocks separated by blank lines.
std::string format_kernel(const KernelRegion& kernel);

}  // namespace repulse
