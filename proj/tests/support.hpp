#pragma once

// Fixtures, generators and brute-force oracles shared by the test binaries.
// Oracles deliberately avoid the library's own predicates where they can.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "repulse/flow.hpp"
#include "repulse/geometry.hpp"
#include "repulse/kernel.hpp"
#include "repulse/planner.hpp"
#include "repulse/random.hpp"
#include "repulse/simulator.hpp"

namespace repulse::testing {

inline ConvexPolygon unit_square() { return ConvexPolygon::validate({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
inline ConvexPolygon rectangle() { return ConvexPolygon::validate({{0, 0}, {2, 0}, {2, 1}, {0, 1}}); }
inline ConvexPolygon equilateral() {
  return ConvexPolygon::validate({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
}

// Regular n-gon with the given edge length, e_0 horizontal at the bottom.
inline ConvexPolygon regular(std::size_t n, double edge = 2.0) {
  const double r = edge / (2.0 * std::sin(std::numbers::pi / static_cast<double>(n)));
  std::vector<Point> pts;
  for (std::size_t j = 0; j < n; ++j) {
    const double a = -std::numbers::pi / 2 - std::numbers::pi / static_cast<double>(n) +
                     2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    pts.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return ConvexPolygon::validate(pts);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Uniform point in P via an area-weighted triangle fan.
inline Point random_interior(const ConvexPolygon& p, std::mt19937_64& rng) {
  std::vector<double> areas;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    areas.push_back(0.5 * cross(p.vertex(i) - p.vertex(0), p.vertex(i + 1) - p.vertex(0)));
  }
  std::discrete_distribution<std::size_t> pick(areas.begin(), areas.end());
  const std::size_t i = pick(rng) + 1;
  double a = uniform(rng, 0, 1), b = uniform(rng, 0, 1);
  if (a + b > 1) {
    a = 1 - a;
    b = 1 - b;
  }
  return p.vertex(0) + a * (p.vertex(i) - p.vertex(0)) + b * (p.vertex(i + 1) - p.vertex(0));
}

inline BoundaryPoint random_boundary(const ConvexPolygon& p, std::mt19937_64& rng) {
  return from_perimeter_coordinate(p, uniform(rng, 0, p.perimeter()));
}

// Triangle on the unit circle with every angle below pi/2 - margin.
inline std::vector<Point> acute_triangle_points(std::mt19937_64& rng, double margin = 0.05) {
  for (;;) {
    std::vector<double> t{uniform(rng, 0, 2 * std::numbers::pi), uniform(rng, 0, 2 * std::numbers::pi),
                          uniform(rng, 0, 2 * std::numbers::pi)};
    std::sort(t.begin(), t.end());
    // Inscribed angle = half the opposite arc.
    const double arcs[3] = {t[1] - t[0], t[2] - t[1], 2 * std::numbers::pi - (t[2] - t[0])};
    bool ok = true;
    for (double arc : arcs) ok = ok && arc / 2 < std::numbers::pi / 2 - margin && arc > 0.2;
    if (!ok) continue;
    std::vector<Point> pts;
    for (double a : t) pts.push_back({std::cos(a), std::sin(a)});
    return pts;
  }
}

inline ConvexPolygon random_acute_triangle(std::mt19937_64& rng) {
  return ConvexPolygon::validate(acute_triangle_points(rng));
}

// An acute triangle whose edges are replaced by shallow outward arcs; the
// three corners stay acute.
inline ConvexPolygon random_three_acute(std::mt19937_64& rng) {
  const auto tri = acute_triangle_points(rng, 0.3);
  std::vector<Point> pts;
  for (std::size_t e = 0; e < 3; ++e) {
    const Point a = tri[e];
    const Point b = tri[(e + 1) % 3];
    pts.push_back(a);
    const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    const double phi = 0.1;  // tangent deviation at the arc ends
    const Point mid = 0.5 * (a + b);
    const double half = 0.5 * distance(a, b);
    const double radius = half / std::sin(phi);
    const Point outward = (1.0 / norm(b - a)) * Point{(b - a).y, -(b - a).x};
    const Point centre = mid - (radius * std::cos(phi)) * outward;
    const Point ua = (1.0 / radius) * (a - centre);
    const double start = std::atan2(ua.y, ua.x);
    for (std::size_t k = 1; k <= extra; ++k) {
      const double ang = start + 2 * phi * static_cast<double>(k) / static_cast<double>(extra + 1);
      pts.push_back(centre + radius * Point{std::cos(ang), std::sin(ang)});
    }
  }
  return ConvexPolygon::validate(pts);
}

inline ConvexPolygon random_at_most_two_acute(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  for (;;) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    ConvexPolygon p = random_convex_polygon(n, rng);
    if (count_acute(p) <= 2) return p;
  }
}

inline double segment_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  const double t = std::clamp(dot(p - a, d) / dot(d, d), 0.0, 1.0);
  return distance(p, a + t * d);
}

inline double chord_distance(const ConvexPolygon& polygon, Point p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Chord& c : slab_chords(polygon)) best = std::min(best, segment_distance(p, c.from, c.to));
  return best;
}

// Accumulation vertices of w from first-order distance changes at each
// vertex; flat counts as moving on.
inline std::vector<std::size_t> oracle_accumulations(const ConvexPolygon& p, Point w, double eps = 1e-9) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point v = p.vertex(i);
    const Point ahead = p.vertex(i + 1) - v;
    const Point behind = p.vertex(i + p.size() - 1) - v;
    const bool closer_ahead = dot(v - w, ahead) / norm(ahead) < -eps;
    const bool closer_behind = dot(v - w, behind) / norm(behind) < -eps;
    if (closer_ahead && closer_behind) out.push_back(i);
  }
  return out;
}

// Slab membership straight from the definition: w projects into the edge.
inline std::size_t oracle_slab_count(const ConvexPolygon& p, Point w) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point a = p.vertex(i);
    const Point d = p.vertex(i + 1) - a;
    const double t = dot(w - a, d) / dot(d, d);
    count += t >= 0.0 && t <= 1.0;
  }
  return count;
}

inline std::vector<Point> occupied_after(const ConvexPolygon& p, Point w, Seeding seeding) {
  const std::vector<Point> act{w};
  return simulate_sequence(p, act, seeding).occupied;
}

inline bool ring_contains(const std::vector<Point>& ring, Point p, double eps = 0.0) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point a = ring[i];
    const Point b = ring[(i + 1) % ring.size()];
    if (cross(b - a, p - a) / norm(b - a) < -eps) return false;
  }
  return true;
}

}  // namespace repulse::testing
