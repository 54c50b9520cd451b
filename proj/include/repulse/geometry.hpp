#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace repulse {

enum class ErrorKind {
  InvalidInput,
  NotConvex,
  NotCCW,
  DegenerateVertex,
  ActuatorOnParticle,
  Parse,
  Internal,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library. `kind()` drives the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// The single tolerance knob shared by every module. `abs` is a length for
// inputs of coordinate scale ~1, `ang` is in radians.
struct Tolerance {
  double abs = 1e-9;
  double ang = 1e-9;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline Point left_normal(Point a) { return {-a.y, a.x}; }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

enum class Orientation { CCW, CW, Collinear };

// Twice the signed area of (a, b, c). Falls back to extended precision when
// the double result is within its own rounding error of zero.
double orient2d(Point a, Point b, Point c);

// Sign of (b-a)x(c-a). Collinear when the third point is within tol.abs of
// the line through the other two (measured against the longer operand).
Orientation orientation(Point a, Point b, Point c, const Tolerance& tol = {});

enum class AngleClass { Acute, Right, NonAcute };

// A point on the boundary: parameter t along edge `edge` from v_edge to
// v_edge+1. Canonical form keeps t in [0, 1); t == 1 is stored as the next
// edge at t == 0.
struct BoundaryPoint {
  std::size_t edge = 0;
  double t = 0.0;

  bool is_vertex() const { return t == 0.0; }
  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

// Strict ccw boundary order starting at v_0.
inline bool boundary_less(const BoundaryPoint& a, const BoundaryPoint& b) {
  return a.edge < b.edge || (a.edge == b.edge && a.t < b.t);
}

// Strictly convex polygon with vertices in counterclockwise order. Only
// constructible through `validate`, so every instance satisfies the
// invariants.
class ConvexPolygon {
 public:
  static ConvexPolygon validate(std::vector<Point> vertices, const Tolerance& tol = {});

  std::size_t size() const { return vertices_.size(); }
  std::span<const Point> vertices() const { return vertices_; }

  // Indices are taken modulo n.
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  std::size_t next(std::size_t i) const { return (i + 1) % vertices_.size(); }
  std::size_t prev(std::size_t i) const { return (i + vertices_.size() - 1) % vertices_.size(); }

  // e_i runs from v_i to v_{i+1}.
  Point edge_vector(std::size_t i) const { return vertex(i + 1) - vertex(i); }
  double edge_length(std::size_t i) const { return lengths_[i % lengths_.size()]; }
  // Arc length from v_0 counterclockwise to v_i.
  double arc_offset(std::size_t i) const { return offsets_[i % offsets_.size()]; }
  double perimeter() const { return perimeter_; }
  double area() const;

  // Closed membership test with tolerance.
  bool contains(Point p, const Tolerance& tol = {}) const;
  // Distance from p to the boundary (p inside or outside).
  double boundary_distance(Point p) const;

  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  explicit ConvexPolygon(std::vector<Point> vertices);

  std::vector<Point> vertices_;
  std::vector<double> lengths_;
  std::vector<double> offsets_;
  double perimeter_ = 0.0;
};

double interior_angle(const ConvexPolygon& polygon, std::size_t i);
AngleClass classify_angle(const ConvexPolygon& polygon, std::size_t i, const Tolerance& tol = {});

// Parameter of the orthogonal projection of w onto the line of e_i, snapped
// to exactly 0 or 1 when the foot is within tol.abs of an endpoint. Not
// clamped: values outside [0, 1] mean the foot misses the edge.
double foot_parameter(const ConvexPolygon& polygon, std::size_t i, Point w,
                      const Tolerance& tol = {});

// Foot of the perpendicular from w to e_i when it lies on the closed edge.
std::optional<BoundaryPoint> perpendicular_foot(Point w, std::size_t i,
                                                const ConvexPolygon& polygon,
                                                const Tolerance& tol = {});

BoundaryPoint canonical_boundary_point(const ConvexPolygon& polygon, std::size_t edge, double t);
std::optional<BoundaryPoint> boundary_locate(const ConvexPolygon& polygon, Point p,
                                             const Tolerance& tol = {});
Point boundary_eval(const ConvexPolygon& polygon, const BoundaryPoint& b);
// Arc length from v_0 counterclockwise to b.
double perimeter_coordinate(const ConvexPolygon& polygon, const BoundaryPoint& b);
BoundaryPoint from_perimeter_coordinate(const ConvexPolygon& polygon, double s);
// Length of the counterclockwise arc from `from` to `to`; zero when equal.
double ccw_distance(const ConvexPolygon& polygon, const BoundaryPoint& from,
                    const BoundaryPoint& to);

// Lowest vertex, lowest x on ties.
std::size_t lowest_vertex(const ConvexPolygon& polygon);

}  // namespace repulse
