#include "repulse/linear_gather.hpp"

#include <algorithm>

#include "repulse/flow.hpp"

namespace repulse {
namespace {

// A particle moving ccw that reaches v_m keeps going when e_m does not bring
// it closer to x (flat counts as passing through).
bool passes_ccw(const ConvexPolygon& polygon, Point x, std::size_t m, const Tolerance& tol) {
  return foot_parameter(polygon, m, x, tol) <= 0.0;
}

bool passes_cw(const ConvexPolygon& polygon, Point x, std::size_t m, const Tolerance& tol) {
  return foot_parameter(polygon, polygon.prev(m), x, tol) >= 1.0;
}

struct RawArc {
  BoundaryPoint start;
  std::size_t vertex;
};

// Two-caliper sweep computing the ccw map. The first caliper is x, walking
// every edge from the lowest vertex; the second is the index m of the
// current first accumulation vertex, which only ever advances.
std::vector<RawArc> sweep_ccw(const ConvexPolygon& polygon, const Tolerance& tol, std::size_t& events) {
  const std::size_t n = polygon.size();
  const std::size_t start = lowest_vertex(polygon);
  std::vector<RawArc> arcs;
  std::size_t m = start + 1;  // unwrapped
  auto advance = [&](Point x, std::size_t k) {
    while (passes_ccw(polygon, x, m % n, tol)) {
      ++m;
      ++events;
      if (m >= k + n + 1) throw Error(ErrorKind::Internal, "accumulation sweep wrapped around");
    }
  };
  for (std::size_t k = start; k < start + n; ++k) {
    const std::size_t edge = k % n;
    const Point origin = polygon.vertex(edge);
    const Point dk = polygon.edge_vector(edge);
    m = std::max(m, k + 1);
    double s = 0.0;
    advance(origin, k);
    arcs.push_back({{edge, 0.0}, m % n});
    for (;;) {
      const std::size_t target = m % n;
      const Point dm = polygon.edge_vector(target);
      const double c1 = dot(dk, dm);
      if (c1 >= 0.0) break;
      // x crosses the perpendicular to e_m at v_m here.
      const double c0 = dot(origin - polygon.vertex(target), dm);
      const double s_next = -c0 / c1;
      if (!(s_next > s) || (1.0 - s_next) * polygon.edge_length(edge) <= tol.abs) break;
      s = s_next;
      ++m;
      ++events;
      advance(origin + s * dk, k);
      arcs.push_back({{edge, s}, m % n});
    }
    ++events;
  }
  return arcs;
}

std::vector<AccumulationArc> close_arcs(const std::vector<RawArc>& raw) {
  std::vector<RawArc> merged;
  for (const RawArc& arc : raw) {
    if (!merged.empty() && merged.back().vertex == arc.vertex) continue;
    if (!merged.empty() && merged.back().start == arc.start) {
      merged.back().vertex = arc.vertex;
      continue;
    }
    merged.push_back(arc);
  }
  while (merged.size() > 1 && merged.back().vertex == merged.front().vertex) {
    merged.front().start = merged.back().start;
    merged.pop_back();
  }
  std::vector<AccumulationArc> out;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    out.push_back({merged[i].start, merged[(i + 1) % merged.size()].start, merged[i].vertex});
  }
  return out;
}

// Rotates arcs so the first one starts at the smallest boundary key.
void rotate_to_origin(std::vector<AccumulationArc>& arcs) {
  auto first = std::min_element(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
    return boundary_less(a.start, b.start);
  });
  std::rotate(arcs.begin(), first, arcs.end());
}

ConvexPolygon mirrored(const ConvexPolygon& polygon, const Tolerance& tol) {
  const std::size_t n = polygon.size();
  std::vector<Point> pts(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Point& p = polygon.vertex((n - j) % n);
    pts[j] = {-p.x, p.y};
  }
  return ConvexPolygon::validate(std::move(pts), tol);
}

BoundaryPoint unmirror(const ConvexPolygon& polygon, const BoundaryPoint& b) {
  const std::size_t n = polygon.size();
  return canonical_boundary_point(polygon, n - 1 - b.edge, 1.0 - b.t);
}

bool in_arc(const BoundaryPoint& x, const AccumulationArc& arc, Direction direction) {
  const auto& a = arc.start;
  const auto& b = arc.end;
  if (a == b) return true;
  if (direction == Direction::CCW) {
    if (boundary_less(a, b)) return !boundary_less(x, a) && boundary_less(x, b);
    return !boundary_less(x, a) || boundary_less(x, b);
  }
  if (boundary_less(a, b)) return boundary_less(a, x) && !boundary_less(b, x);
  return boundary_less(a, x) || !boundary_less(b, x);
}

}  // namespace

const char* to_string(Direction direction) { return direction == Direction::CCW ? "ccw" : "cw"; }

std::size_t AccumulationMap::at(const BoundaryPoint& x) const {
  for (const AccumulationArc& arc : arcs) {
    if (in_arc(x, arc, direction)) return arc.vertex;
  }
  throw Error(ErrorKind::Internal, "accumulation map does not cover the boundary");
}

AccumulationMap accumulation_map(const ConvexPolygon& polygon, Direction direction, const Tolerance& tol) {
  AccumulationMap out;
  out.direction = direction;
  if (direction == Direction::CCW) {
    out.arcs = close_arcs(sweep_ccw(polygon, tol, out.events));
  } else {
    // A cw sweep is a ccw sweep of the reflected polygon.
    const ConvexPolygon mirror = mirrored(polygon, tol);
    const std::size_t n = polygon.size();
    const auto arcs = close_arcs(sweep_ccw(mirror, tol, out.events));
    for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) {
      out.arcs.push_back({unmirror(polygon, it->end), unmirror(polygon, it->start), (n - it->vertex) % n});
    }
  }
  rotate_to_origin(out.arcs);
  return out;
}

std::size_t first_accumulation(const ConvexPolygon& polygon, const BoundaryPoint& x, Direction direction,
                               const Tolerance& tol) {
  const std::size_t n = polygon.size();
  const Point at = boundary_eval(polygon, x);
  if (direction == Direction::CCW) {
    std::size_t m = x.edge + 1;
    while (passes_ccw(polygon, at, m % n, tol)) {
      if (++m > x.edge + n) throw Error(ErrorKind::Internal, "boundary walk wrapped around");
    }
    return m % n;
  }
  std::size_t m = x.edge + n - (x.t == 0.0 ? 1 : 0);
  std::size_t steps = 0;
  while (passes_cw(polygon, at, m % n, tol)) {
    --m;
    if (++steps > n) throw Error(ErrorKind::Internal, "boundary walk wrapped around");
  }
  return m % n;
}

std::optional<GatherWitness> find_gather_point(const ConvexPolygon& polygon, const Tolerance& tol) {
  const AccumulationMap ccw = accumulation_map(polygon, Direction::CCW, tol);
  const AccumulationMap cw = accumulation_map(polygon, Direction::CW, tol);

  std::vector<BoundaryPoint> breaks;
  breaks.reserve(ccw.arcs.size() + cw.arcs.size());
  {
    std::vector<BoundaryPoint> a, b;
    for (const auto& arc : ccw.arcs) a.push_back(arc.start);
    for (const auto& arc : cw.arcs) b.push_back(arc.start);
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(breaks), boundary_less);
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  }

  auto confirm = [&](const BoundaryPoint& p, std::size_t vertex) -> std::optional<GatherWitness> {
    const auto target = gather_target(polygon, boundary_eval(polygon, p), tol);
    if (target && *target == vertex) return GatherWitness{p, vertex};
    return std::nullopt;
  };

  // Pointers: last ccw arc with start <= p, last cw arc with start < p and
  // with start <= p. -1 wraps to the final arc.
  std::ptrdiff_t i_le = -1, j_lt = -1, j_le = -1;
  const auto nc = static_cast<std::ptrdiff_t>(ccw.arcs.size());
  const auto nw = static_cast<std::ptrdiff_t>(cw.arcs.size());
  auto pick = [](const AccumulationMap& map, std::ptrdiff_t i) {
    return map.arcs[static_cast<std::size_t>(i < 0 ? static_cast<std::ptrdiff_t>(map.arcs.size()) - 1 : i)].vertex;
  };
  for (std::size_t b = 0; b < breaks.size(); ++b) {
    const BoundaryPoint& p = breaks[b];
    while (i_le + 1 < nc && !boundary_less(p, ccw.arcs[static_cast<std::size_t>(i_le + 1)].start)) ++i_le;
    while (j_lt + 1 < nw && boundary_less(cw.arcs[static_cast<std::size_t>(j_lt + 1)].start, p)) ++j_lt;
    while (j_le + 1 < nw && !boundary_less(p, cw.arcs[static_cast<std::size_t>(j_le + 1)].start)) ++j_le;

    const std::size_t ccw_here = pick(ccw, i_le);
    if (ccw_here == pick(cw, j_lt)) {
      if (auto w = confirm(p, ccw_here)) return w;
    }
    if (ccw_here == pick(cw, j_le)) {
      const double s0 = perimeter_coordinate(polygon, p);
      double s1 = b + 1 < breaks.size() ? perimeter_coordinate(polygon, breaks[b + 1])
                                        : perimeter_coordinate(polygon, breaks.front()) + polygon.perimeter();
      if (auto w = confirm(from_perimeter_coordinate(polygon, 0.5 * (s0 + s1)), ccw_here)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace repulse
