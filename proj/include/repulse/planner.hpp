#pragma once

#include <optional>
#include <vector>

#include "repulse/geometry.hpp"

namespace repulse {

struct EnclosingDisk {
  Point center;
  double radius = 0.0;
  std::vector<std::size_t> support;  // 2 (a diameter) or 3 (center strictly inside), ascending
};

enum class Verdict { Ungatherable, OneActivation, TwoActivations };
enum class PlanRationale { None, Witness, DiameterCase, TriangleCase };

const char* to_string(Verdict verdict);
const char* to_string(PlanRationale rationale);

struct GatherPlan {
  Verdict verdict = Verdict::Ungatherable;
  std::vector<Point> activations;
  std::optional<std::size_t> predicted_gather;
  PlanRationale rationale = PlanRationale::None;
};

std::size_t count_acute(const ConvexPolygon& polygon, const Tolerance& tol = {});

// Minimum disk over the vertex set. Support is canonical: the lowest-index
// diameter pair when one exists, else the lexicographically least triple
// whose triangle strictly contains the center.
EnclosingDisk smallest_enclosing_disk(const ConvexPolygon& polygon, const Tolerance& tol = {});

// Throws Error(Internal) if the plan it builds fails simulation.
GatherPlan plan_gather(const ConvexPolygon& polygon, const Tolerance& tol = {});

enum class PathDirection { WithCCW, AgainstCCW };

// Whether the boundary path between `from` and `to` is self-approaching when
// walked in `direction`. With WithCCW the path is the ccw arc from `from` to
// `to`; with AgainstCCW it is the cw arc. Checked on `samples` points per
// edge piece.
bool self_approaching(const ConvexPolygon& polygon, const BoundaryPoint& from, const BoundaryPoint& to,
                      PathDirection direction, const Tolerance& tol = {}, std::size_t samples = 32);

}  // namespace repulse
