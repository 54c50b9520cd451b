#include "repulse/kernel.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <utility>

#include "repulse/flow.hpp"

namespace repulse {
namespace {

Point unit(Point v) { return (1.0 / norm(v)) * v; }

int sign_with(double value, double tol) {
  if (value > tol) return 1;
  if (value < -tol) return -1;
  return 0;
}

// Exit point of the ray from polygon vertex `at` in direction `dir`,
// ignoring the two edges incident to `at`.
Point ray_exit(const ConvexPolygon& polygon, std::size_t at, Point dir) {
  const Point origin = polygon.vertex(at);
  double limit = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < polygon.size(); ++j) {
    if (j == at || j == polygon.prev(at)) continue;
    const Point d = polygon.edge_vector(j);
    const double a = cross(d, origin - polygon.vertex(j));
    const double b = cross(d, dir);
    if (b < 0.0) limit = std::min(limit, a / -b);
  }
  return origin + limit * dir;
}

double ring_area(const std::vector<Point>& ring) {
  double twice = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) twice += cross(ring[i], ring[(i + 1) % ring.size()]);
  return 0.5 * twice;
}

Point vertex_average(const std::vector<Point>& ring) {
  Point sum{};
  for (const Point& p : ring) sum = sum + p;
  return (1.0 / static_cast<double>(ring.size())) * sum;
}

Point area_centroid(const std::vector<Point>& ring) {
  double twice = 0.0;
  Point acc{};
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % ring.size()];
    const double c = cross(p, q);
    twice += c;
    acc = acc + c * (p + q);
  }
  return (1.0 / (3.0 * twice)) * acc;
}

double distance_to_ring_edges(const std::vector<Point>& ring, Point p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point a = ring[i];
    const Point d = ring[(i + 1) % ring.size()] - a;
    const double t = std::clamp(dot(p - a, d) / dot(d, d), 0.0, 1.0);
    best = std::min(best, distance(p, a + t * d));
  }
  return best;
}

struct Piece {
  std::vector<Point> ring;
  std::vector<int> labels;
};

// Clips one side (`keep` = +1 or -1) of a convex cell against a line. Each
// emitted point carries the label of the ring edge leaving it.
Piece clip_side(const Cell& cell, int line_index, int keep,
                const std::vector<int>& signs, const std::vector<double>& offsets) {
  Piece out;
  const std::size_t m = cell.ring.size();
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t k1 = (k + 1) % m;
    const int sa = signs[k];
    const int sb = signs[k1];
    const int label = cell.edge_labels[k];
    if (sa == keep) {
      out.ring.push_back(cell.ring[k]);
      out.labels.push_back(label);
    } else if (sa == 0) {
      out.ring.push_back(cell.ring[k]);
      out.labels.push_back(sb == -keep ? line_index : label);
    }
    if (sa * sb == -1) {
      const double f = offsets[k] / (offsets[k] - offsets[k1]);
      const Point q = cell.ring[k] + f * (cell.ring[k1] - cell.ring[k]);
      out.ring.push_back(q);
      out.labels.push_back(sa == keep ? line_index : label);
    }
  }
  return out;
}

std::optional<std::pair<Cell, Cell>> split_cell(const Cell& cell, const SubdivisionLine& line,
                                                int line_index, const Tolerance& tol) {
  const std::size_t m = cell.ring.size();
  std::vector<double> offsets(m);
  std::vector<int> signs(m);
  bool has_pos = false;
  bool has_neg = false;
  for (std::size_t k = 0; k < m; ++k) {
    offsets[k] = line.side(cell.ring[k]);
    signs[k] = sign_with(offsets[k], tol.abs);
    has_pos |= signs[k] > 0;
    has_neg |= signs[k] < 0;
  }
  if (!has_pos || !has_neg) return std::nullopt;
  Piece pos = clip_side(cell, line_index, +1, signs, offsets);
  Piece neg = clip_side(cell, line_index, -1, signs, offsets);
  if (pos.ring.size() < 3 || neg.ring.size() < 3) return std::nullopt;
  Cell a;
  a.ring = std::move(pos.ring);
  a.edge_labels = std::move(pos.labels);
  Cell b;
  b.ring = std::move(neg.ring);
  b.edge_labels = std::move(neg.labels);
  return std::make_pair(std::move(a), std::move(b));
}

void add_chord_line(std::vector<SubdivisionLine>& lines, const Chord& chord, const ConvexPolygon& polygon,
                    const Tolerance& tol) {
  const Point dir = unit(chord.to - chord.from);
  const Point edge = polygon.edge_vector(chord.source_edge);
  const Point toward_slab = chord.endpoint_side == ChordEnd::Start ? edge : -1.0 * edge;
  for (SubdivisionLine& line : lines) {
    if (std::abs(cross(line.direction, dir)) <= tol.ang && std::abs(line.side(chord.from)) <= tol.abs &&
        std::abs(line.side(chord.to)) <= tol.abs) {
      const int side = cross(line.direction, toward_slab) > 0 ? 1 : -1;
      line.slabs.push_back({chord.source_edge, side});
      return;
    }
  }
  SubdivisionLine line{chord.from, dir, {}};
  const int side = cross(line.direction, toward_slab) > 0 ? 1 : -1;
  line.slabs.push_back({chord.source_edge, side});
  lines.push_back(std::move(line));
}

}  // namespace

std::vector<Chord> slab_chords(const ConvexPolygon& polygon, const Tolerance& tol) {
  std::vector<Chord> chords;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point inward = unit(left_normal(polygon.edge_vector(i)));
    for (const ChordEnd end : {ChordEnd::Start, ChordEnd::End}) {
      const std::size_t at = end == ChordEnd::Start ? i : polygon.next(i);
      // A ray at an acute or right vertex leaves P at once or runs along the
      // adjacent edge; neither subdivides the interior.
      if (classify_angle(polygon, at, tol) != AngleClass::NonAcute) continue;
      Point to = ray_exit(polygon, at, inward);
      if (const auto snapped = boundary_locate(polygon, to, tol)) to = boundary_eval(polygon, *snapped);
      if (distance(polygon.vertex(at), to) <= tol.abs) continue;
      chords.push_back({i, end, polygon.vertex(at), to});
    }
  }
  return chords;
}

// Lines are inserted one at a time and every current cell is split by each.
// That is O(n^3) in the worst case, which is fine for the polygon sizes this
// runs on.
SlabDecomposition build_decomposition(const ConvexPolygon& polygon, const Tolerance& tol) {
  SlabDecomposition out;
  for (const Chord& chord : slab_chords(polygon, tol)) add_chord_line(out.lines, chord, polygon, tol);

  Cell whole;
  whole.ring.assign(polygon.vertices().begin(), polygon.vertices().end());
  whole.edge_labels.assign(polygon.size(), kPolygonBoundary);
  std::vector<Cell> cells{std::move(whole)};
  for (std::size_t li = 0; li < out.lines.size(); ++li) {
    std::vector<Cell> next;
    next.reserve(cells.size() * 2);
    for (Cell& cell : cells) {
      if (auto halves = split_cell(cell, out.lines[li], static_cast<int>(li), tol)) {
        next.push_back(std::move(halves->first));
        next.push_back(std::move(halves->second));
      } else {
        next.push_back(std::move(cell));
      }
    }
    cells = std::move(next);
  }

  for (Cell& cell : cells) {
    cell.area = ring_area(cell.ring);
    cell.sample = vertex_average(cell.ring);
    if (distance_to_ring_edges(cell.ring, cell.sample) <= tol.abs) cell.sample = area_centroid(cell.ring);
  }
  out.cells = std::move(cells);

  // Dual graph: cells facing each other across a shared stretch of a line.
  struct Face {
    std::size_t cell;
    double lo, hi;
    int side;
  };
  std::vector<std::vector<Face>> by_line(out.lines.size());
  for (std::size_t c = 0; c < out.cells.size(); ++c) {
    const Cell& cell = out.cells[c];
    for (std::size_t k = 0; k < cell.ring.size(); ++k) {
      const int label = cell.edge_labels[k];
      if (label == kPolygonBoundary) continue;
      const SubdivisionLine& line = out.lines[static_cast<std::size_t>(label)];
      const double u0 = dot(cell.ring[k] - line.origin, line.direction);
      const double u1 = dot(cell.ring[(k + 1) % cell.ring.size()] - line.origin, line.direction);
      const int side = line.side(cell.sample) > 0 ? 1 : -1;
      by_line[static_cast<std::size_t>(label)].push_back({c, std::min(u0, u1), std::max(u0, u1), side});
    }
  }
  for (std::size_t li = 0; li < by_line.size(); ++li) {
    const auto& faces = by_line[li];
    for (const Face& p : faces) {
      if (p.side < 0) continue;
      for (const Face& q : faces) {
        if (q.side > 0) continue;
        if (std::min(p.hi, q.hi) - std::max(p.lo, q.lo) > tol.abs) out.adjacency.push_back({p.cell, q.cell, li});
      }
    }
  }

  // Slab sets: one direct evaluation, then propagation across the dual graph.
  const std::size_t n = polygon.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> neighbours(out.cells.size());
  for (const CellAdjacency& adj : out.adjacency) {
    neighbours[adj.a].push_back({adj.b, adj.line});
    neighbours[adj.b].push_back({adj.a, adj.line});
  }
  std::vector<std::vector<char>> member(out.cells.size());
  std::vector<char> seen(out.cells.size(), 0);
  out.seed_cell = 0;
  member[0].assign(n, 0);
  for (std::size_t e : slab_membership(polygon, out.cells[0].sample, tol)) member[0][e] = 1;
  seen[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (const auto& [d, li] : neighbours[c]) {
      if (seen[d]) continue;
      const SubdivisionLine& line = out.lines[li];
      const int entering = line.side(out.cells[d].sample) > 0 ? 1 : -1;
      member[d] = member[c];
      for (const SlabAnnotation& slab : line.slabs) member[d][slab.edge] = slab.slab_side == entering ? 1 : 0;
      seen[d] = 1;
      queue.push_back(d);
    }
  }
  for (std::size_t c = 0; c < out.cells.size(); ++c) {
    if (!seen[c]) throw Error(ErrorKind::Internal, "slab decomposition dual graph is disconnected");
    for (std::size_t e = 0; e < n; ++e) {
      if (member[c][e]) out.cells[c].slab_set.push_back(e);
    }
  }
  return out;
}

KernelRegion repulsion_kernel(const ConvexPolygon& polygon, const SlabDecomposition& decomposition,
                              const Tolerance& tol) {
  KernelRegion out;
  for (std::size_t c = 0; c < decomposition.cells.size(); ++c) {
    const Cell& cell = decomposition.cells[c];
    if (cell.slab_set.size() != 1) continue;
    const auto target = gather_target(polygon, cell.sample, tol);
    if (!target) {
      throw Error(ErrorKind::Internal, "kernel cell sample has more than one accumulation point");
    }
    out.cells.push_back({c, cell.ring, cell.sample, *target});
  }
  return out;
}

KernelRegion repulsion_kernel(const ConvexPolygon& polygon, const Tolerance& tol) {
  return repulsion_kernel(polygon, build_decomposition(polygon, tol), tol);
}

}  // namespace repulse
