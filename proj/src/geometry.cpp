#include "repulse/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace repulse {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::NotConvex: return "not convex";
    case ErrorKind::NotCCW: return "not counterclockwise";
    case ErrorKind::DegenerateVertex: return "degenerate vertex";
    case ErrorKind::ActuatorOnParticle: return "actuator on particle";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Internal: return "internal error";
  }
  return "unknown";
}

double orient2d(Point a, Point b, Point c) {
  const double left = (b.x - a.x) * (c.y - a.y);
  const double right = (b.y - a.y) * (c.x - a.x);
  const double det = left - right;
  // Shewchuk's first-stage bound for the two-product difference.
  const double bound = 3.3306690738754716e-16 * (std::abs(left) + std::abs(right));
  if (std::abs(det) > bound) return det;
  const long double bx = static_cast<long double>(b.x) - a.x;
  const long double by = static_cast<long double>(b.y) - a.y;
  const long double cx = static_cast<long double>(c.x) - a.x;
  const long double cy = static_cast<long double>(c.y) - a.y;
  return static_cast<double>(bx * cy - by * cx);
}

Orientation orientation(Point a, Point b, Point c, const Tolerance& tol) {
  if (!is_finite(a) || !is_finite(b) || !is_finite(c)) {
    throw Error(ErrorKind::InvalidInput, "orientation: non-finite coordinate");
  }
  const double det = orient2d(a, b, c);
  const double scale = std::max(norm(b - a), norm(c - a));
  if (std::abs(det) <= tol.abs * scale) return Orientation::Collinear;
  return det > 0 ? Orientation::CCW : Orientation::CW;
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  lengths_.resize(n);
  offsets_.resize(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    offsets_[i] = acc;
    lengths_[i] = norm(vertices_[(i + 1) % n] - vertices_[i]);
    acc += lengths_[i];
  }
  perimeter_ = acc;
}

ConvexPolygon ConvexPolygon::validate(std::vector<Point> vertices, const Tolerance& tol) {
  const std::size_t n = vertices.size();
  if (n < 3) throw Error(ErrorKind::InvalidInput, "polygon needs at least 3 vertices");
  for (const Point& p : vertices) {
    if (!is_finite(p)) throw Error(ErrorKind::InvalidInput, "polygon has a non-finite coordinate");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (distance(vertices[i], vertices[(i + 1) % n]) <= tol.abs) {
      throw Error(ErrorKind::DegenerateVertex,
                  "duplicate vertex at index " + std::to_string((i + 1) % n));
    }
  }
  std::size_t ccw = 0;
  std::size_t cw = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Orientation o = orientation(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n], tol);
    if (o == Orientation::Collinear) {
      throw Error(ErrorKind::DegenerateVertex,
                  "collinear vertices around index " + std::to_string((i + 1) % n));
    }
    (o == Orientation::CCW ? ccw : cw) += 1;
  }
  if (cw == n) throw Error(ErrorKind::NotCCW, "vertices are in clockwise order");
  if (cw != 0) throw Error(ErrorKind::NotConvex, "polygon has a reflex vertex");
  // All left turns can still wind around more than once.
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = vertices[(i + 1) % n] - vertices[i];
    const Point b = vertices[(i + 2) % n] - vertices[(i + 1) % n];
    turning += std::atan2(cross(a, b), dot(a, b));
  }
  if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6) {
    throw Error(ErrorKind::NotConvex, "polygon boundary is not simple");
  }
  return ConvexPolygon(std::move(vertices));
}

double ConvexPolygon::area() const {
  double twice = 0.0;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(vertices_[i], vertices_[(i + 1) % n]);
  return 0.5 * twice;
}

bool ConvexPolygon::contains(Point p, const Tolerance& tol) const {
  if (!is_finite(p)) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    const Point d = edge_vector(i);
    if (cross(d, p - vertex(i)) < -tol.abs * edge_length(i)) return false;
  }
  return true;
}

double ConvexPolygon::boundary_distance(Point p) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size(); ++i) {
    const Point d = edge_vector(i);
    const double t = std::clamp(dot(p - vertex(i), d) / dot(d, d), 0.0, 1.0);
    best = std::min(best, distance(p, vertex(i) + t * d));
  }
  return best;
}

double interior_angle(const ConvexPolygon& polygon, std::size_t i) {
  const Point v = polygon.vertex(i);
  const Point to_next = polygon.vertex(i + 1) - v;
  const Point to_prev = polygon.vertex(polygon.prev(i)) - v;
  return std::atan2(std::abs(cross(to_next, to_prev)), dot(to_next, to_prev));
}

AngleClass classify_angle(const ConvexPolygon& polygon, std::size_t i, const Tolerance& tol) {
  const double angle = interior_angle(polygon, i);
  const double half_pi = std::numbers::pi / 2.0;
  if (std::abs(angle - half_pi) <= tol.ang) return AngleClass::Right;
  return angle < half_pi ? AngleClass::Acute : AngleClass::NonAcute;
}

double foot_parameter(const ConvexPolygon& polygon, std::size_t i, Point w, const Tolerance& tol) {
  const Point d = polygon.edge_vector(i);
  const double len = polygon.edge_length(i);
  const double t = dot(w - polygon.vertex(i), d) / (len * len);
  if (std::abs(t) * len <= tol.abs) return 0.0;
  if (std::abs(t - 1.0) * len <= tol.abs) return 1.0;
  return t;
}

std::optional<BoundaryPoint> perpendicular_foot(Point w, std::size_t i, const ConvexPolygon& polygon,
                                                const Tolerance& tol) {
  const double t = foot_parameter(polygon, i, w, tol);
  if (t < 0.0 || t > 1.0) return std::nullopt;
  return canonical_boundary_point(polygon, i, t);
}

BoundaryPoint canonical_boundary_point(const ConvexPolygon& polygon, std::size_t edge, double t) {
  edge %= polygon.size();
  if (t >= 1.0) return {polygon.next(edge), 0.0};
  if (t <= 0.0) return {edge, 0.0};
  return {edge, t};
}

std::optional<BoundaryPoint> boundary_locate(const ConvexPolygon& polygon, Point p, const Tolerance& tol) {
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    if (distance(p, polygon.vertex(i)) <= tol.abs) return BoundaryPoint{i, 0.0};
  }
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point d = polygon.edge_vector(i);
    const double len = polygon.edge_length(i);
    const double t = dot(p - polygon.vertex(i), d) / (len * len);
    if (t < 0.0 || t > 1.0) continue;
    if (std::abs(cross(d, p - polygon.vertex(i))) / len <= tol.abs) {
      return canonical_boundary_point(polygon, i, t);
    }
  }
  return std::nullopt;
}

Point boundary_eval(const ConvexPolygon& polygon, const BoundaryPoint& b) {
  if (b.t == 0.0) return polygon.vertex(b.edge);
  return polygon.vertex(b.edge) + b.t * polygon.edge_vector(b.edge);
}

double perimeter_coordinate(const ConvexPolygon& polygon, const BoundaryPoint& b) {
  return polygon.arc_offset(b.edge) + b.t * polygon.edge_length(b.edge);
}

BoundaryPoint from_perimeter_coordinate(const ConvexPolygon& polygon, double s) {
  const double total = polygon.perimeter();
  s = std::fmod(s, total);
  if (s < 0.0) s += total;
  const std::size_t n = polygon.size();
  std::size_t edge = n - 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (polygon.arc_offset(i) > s) {
      edge = i - 1;
      break;
    }
  }
  const double t = (s - polygon.arc_offset(edge)) / polygon.edge_length(edge);
  return canonical_boundary_point(polygon, edge, std::clamp(t, 0.0, 1.0));
}

double ccw_distance(const ConvexPolygon& polygon, const BoundaryPoint& from, const BoundaryPoint& to) {
  double d = perimeter_coordinate(polygon, to) - perimeter_coordinate(polygon, from);
  if (d < 0.0) d += polygon.perimeter();
  return d;
}

std::size_t lowest_vertex(const ConvexPolygon& polygon) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < polygon.size(); ++i) {
    const Point& p = polygon.vertex(i);
    const Point& q = polygon.vertex(best);
    if (p.y < q.y || (p.y == q.y && p.x < q.x)) best = i;
  }
  return best;
}

}  // namespace repulse
