#include "repulse/planner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "repulse/linear_gather.hpp"
#include "repulse/simulator.hpp"

namespace repulse {
namespace {

struct Circle {
  Point center;
  double radius = 0.0;

  bool covers(Point p) const { return distance(center, p) <= radius * (1.0 + 1e-12) + 1e-15; }
};

Circle circle_two(Point a, Point b) { return {0.5 * (a + b), 0.5 * distance(a, b)}; }

Circle circle_three(Point a, Point b, Point c) {
  const Point ab = b - a;
  const Point ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  const double ab2 = dot(ab, ab);
  const double ac2 = dot(ac, ac);
  const Point offset{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
  return {a + offset, norm(offset)};
}

// Iterative Welzl over a fixed-seed shuffle, expected linear time.
Circle minidisk(std::vector<Point> pts) {
  std::mt19937 rng(0x5EDu);
  std::shuffle(pts.begin(), pts.end(), rng);
  Circle c{pts[0], 0.0};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (c.covers(pts[i])) continue;
    c = {pts[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (c.covers(pts[j])) continue;
      c = circle_two(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!c.covers(pts[k])) c = circle_three(pts[i], pts[j], pts[k]);
      }
    }
  }
  return c;
}

bool strictly_inside_triangle(Point a, Point b, Point c, Point p, double eps) {
  auto side = [&](Point u, Point v) { return cross(v - u, p - u) / distance(u, v) > eps; };
  return side(a, b) && side(b, c) && side(c, a);
}

bool validates(const ConvexPolygon& polygon, const GatherPlan& plan, const Tolerance& tol) {
  try {
    const SimulationOutcome outcome = simulate_plan(polygon, plan, Seeding::vertices_only(), tol);
    return outcome.gathered && plan.predicted_gather &&
           distance(*outcome.gather_point, polygon.vertex(*plan.predicted_gather)) <= tol.abs;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ActuatorOnParticle) return false;
    throw;
  }
}

}  // namespace

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Ungatherable: return "ungatherable";
    case Verdict::OneActivation: return "one";
    case Verdict::TwoActivations: return "two";
  }
  return "?";
}

const char* to_string(PlanRationale rationale) {
  switch (rationale) {
    case PlanRationale::None: return "none";
    case PlanRationale::Witness: return "witness";
    case PlanRationale::DiameterCase: return "diameter";
    case PlanRationale::TriangleCase: return "triangle";
  }
  return "?";
}

std::size_t count_acute(const ConvexPolygon& polygon, const Tolerance& tol) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) count += classify_angle(polygon, i, tol) == AngleClass::Acute;
  return count;
}

EnclosingDisk smallest_enclosing_disk(const ConvexPolygon& polygon, const Tolerance& tol) {
  const auto verts = polygon.vertices();
  const Circle c = minidisk({verts.begin(), verts.end()});
  const double eps = tol.abs * std::max(1.0, c.radius);

  std::vector<std::size_t> on_circle;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (std::abs(distance(verts[i], c.center) - c.radius) <= eps) on_circle.push_back(i);
  }

  EnclosingDisk out{c.center, c.radius, {}};
  for (std::size_t a = 0; a < on_circle.size() && out.support.empty(); ++a) {
    for (std::size_t b = a + 1; b < on_circle.size(); ++b) {
      const Point mid = 0.5 * (verts[on_circle[a]] + verts[on_circle[b]]);
      if (distance(mid, c.center) <= eps) {
        out.support = {on_circle[a], on_circle[b]};
        break;
      }
    }
  }
  if (!out.support.empty()) return out;

  const std::size_t m = on_circle.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t d = b + 1; d < m; ++d) {
        if (strictly_inside_triangle(verts[on_circle[a]], verts[on_circle[b]], verts[on_circle[d]], c.center, eps)) {
          out.support = {on_circle[a], on_circle[b], on_circle[d]};
          return out;
        }
      }
    }
  }
  throw Error(ErrorKind::Internal, "enclosing disk has no diameter pair or containing triple");
}

GatherPlan plan_gather(const ConvexPolygon& polygon, const Tolerance& tol) {
  GatherPlan plan;
  if (count_acute(polygon, tol) >= 3) return plan;

  if (const auto witness = find_gather_point(polygon, tol)) {
    plan.verdict = Verdict::OneActivation;
    plan.activations = {boundary_eval(polygon, witness->location)};
    plan.predicted_gather = witness->gather_vertex;
    plan.rationale = PlanRationale::Witness;
    if (!validates(polygon, plan, tol)) throw Error(ErrorKind::Internal, "witness plan failed simulation");
    return plan;
  }

  const EnclosingDisk disk = smallest_enclosing_disk(polygon, tol);
  if (disk.support.size() == 2) {
    plan.verdict = Verdict::OneActivation;
    plan.rationale = PlanRationale::DiameterCase;
    for (const auto& [i, j] : {std::pair{disk.support[0], disk.support[1]}, std::pair{disk.support[1], disk.support[0]}}) {
      plan.activations = {polygon.vertex(i)};
      plan.predicted_gather = j;
      if (validates(polygon, plan, tol)) return plan;
    }
    throw Error(ErrorKind::Internal, "diameter plan failed simulation");
  }

  // v_j: the support vertex with the widest angle; v_i precedes it.
  const auto& s = disk.support;
  std::size_t pos = 0;
  for (std::size_t q = 1; q < 3; ++q) {
    if (interior_angle(polygon, s[q]) > interior_angle(polygon, s[pos])) pos = q;
  }
  const std::size_t vi = s[(pos + 2) % 3];
  const std::size_t vj = s[pos];
  const std::size_t before_j = polygon.prev(vj);

  plan.verdict = Verdict::TwoActivations;
  plan.rationale = PlanRationale::TriangleCase;
  double delta = 1e-3;
  for (int attempt = 0; attempt <= 20; ++attempt, delta *= 0.5) {
    const BoundaryPoint y{before_j, 1.0 - delta};
    plan.activations = {polygon.vertex(vi), boundary_eval(polygon, y)};
    plan.predicted_gather = first_accumulation(polygon, y, Direction::CCW, tol);
    if (validates(polygon, plan, tol)) return plan;
  }
  throw Error(ErrorKind::Internal, "two-activation plan failed simulation after all retries");
}

bool self_approaching(const ConvexPolygon& polygon, const BoundaryPoint& from, const BoundaryPoint& to,
                      PathDirection direction, const Tolerance& tol, std::size_t samples) {
  const double perimeter = polygon.perimeter();
  const bool with = direction == PathDirection::WithCCW;
  const double length = with ? ccw_distance(polygon, from, to) : ccw_distance(polygon, to, from);
  if (length <= tol.abs) return true;
  const double s0 = perimeter_coordinate(polygon, from);

  // Arc-length positions of the path's corners, start and end included.
  std::vector<double> nodes{0.0};
  for (std::size_t v = 0; v < polygon.size(); ++v) {
    double u = with ? polygon.arc_offset(v) - s0 : s0 - polygon.arc_offset(v);
    u = std::fmod(std::fmod(u, perimeter) + perimeter, perimeter);
    if (u > tol.abs && u < length - tol.abs) nodes.push_back(u);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.push_back(length);

  auto at = [&](double u) {
    const double s = with ? s0 + u : s0 - u;
    return boundary_eval(polygon, from_perimeter_coordinate(polygon, std::fmod(std::fmod(s, perimeter) + perimeter, perimeter)));
  };
  std::vector<Point> pts;
  std::vector<std::size_t> corners;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    corners.push_back(pts.size());
    for (std::size_t m = 0; m < samples; ++m) {
      pts.push_back(at(nodes[k] + (nodes[k + 1] - nodes[k]) * static_cast<double>(m) / static_cast<double>(samples)));
    }
  }
  pts.push_back(at(length));

  // Exact form on the polyline: every later corner lies ahead of the normal
  // at the end of each piece. Sampling alone misses violations near corners.
  std::vector<Point> corner_pts;
  for (double u : nodes) corner_pts.push_back(at(u));
  for (std::size_t k = 0; k + 1 < corner_pts.size(); ++k) {
    const Point d = corner_pts[k + 1] - corner_pts[k];
    const Point tangent = (1.0 / norm(d)) * d;
    for (std::size_t q = k + 2; q < corner_pts.size(); ++q) {
      if (dot(corner_pts[q] - corner_pts[k + 1], tangent) < -tol.abs) return false;
    }
  }

  // |p_a p_c| must not increase as a moves towards c.
  for (std::size_t c = 2; c < pts.size(); ++c) {
    for (std::size_t a = 0; a + 1 < c; ++a) {
      if (distance(pts[a + 1], pts[c]) > distance(pts[a], pts[c]) + tol.abs) return false;
    }
  }

  // The rest of the path seen from each corner spans at most a right angle.
  for (std::size_t q : corners) {
    const Point base = pts[q + 1] - pts[q];
    const double ref = std::atan2(base.y, base.x);
    double lo = 0.0, hi = 0.0;
    for (std::size_t m = q + 1; m < pts.size(); ++m) {
      const Point d = pts[m] - pts[q];
      double a = std::atan2(d.y, d.x) - ref;
      a = std::remainder(a, 2.0 * std::numbers::pi);
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
    if (hi - lo > std::numbers::pi / 2 + tol.ang) return false;
  }
  return true;
}

}  // namespace repulse
