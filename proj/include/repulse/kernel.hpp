#pragma once

#include <vector>

#include "repulse/geometry.hpp"

namespace repulse {

enum class ChordEnd { Start, End };

// Interior-facing perpendicular to `source_edge` at one of its endpoints,
// clipped to the polygon.
struct Chord {
  std::size_t source_edge = 0;
  ChordEnd endpoint_side = ChordEnd::Start;
  Point from;  // the edge endpoint
  Point to;    // where the ray leaves the polygon
};

std::vector<Chord> slab_chords(const ConvexPolygon& polygon, const Tolerance& tol = {});

// One side of a subdivision line bounds the slab of `edge`.
struct SlabAnnotation {
  std::size_t edge = 0;
  int slab_side = +1;  // sign of left_normal(direction) . (p - origin) inside the slab
};

// A chord line, possibly shared by several collinear chords.
struct SubdivisionLine {
  Point origin;
  Point direction;  // unit
  std::vector<SlabAnnotation> slabs;

  double side(Point p) const { return cross(direction, p - origin); }
};

inline constexpr int kPolygonBoundary = -1;

struct Cell {
  std::vector<Point> ring;       // ccw, convex
  std::vector<int> edge_labels;  // label of ring edge k -> k+1: a line index or kPolygonBoundary
  Point sample;                  // strictly interior sample point
  double area = 0.0;
  std::vector<std::size_t> slab_set;  // ascending
};

struct CellAdjacency {
  std::size_t a = 0;  // cell on the positive side of `line`
  std::size_t b = 0;  // cell on the negative side
  std::size_t line = 0;
};

struct SlabDecomposition {
  std::vector<SubdivisionLine> lines;
  std::vector<Cell> cells;
  std::vector<CellAdjacency> adjacency;
  std::size_t seed_cell = 0;
};

SlabDecomposition build_decomposition(const ConvexPolygon& polygon, const Tolerance& tol = {});

struct KernelCell {
  std::size_t cell = 0;  // index into the decomposition
  std::vector<Point> ring;
  Point sample;
  std::size_t gather_vertex = 0;
};

struct KernelRegion {
  std::vector<KernelCell> cells;
  bool empty() const { return cells.empty(); }
};

KernelRegion repulsion_kernel(const ConvexPolygon& polygon, const SlabDecomposition& decomposition,
                              const Tolerance& tol = {});
KernelRegion repulsion_kernel(const ConvexPolygon& polygon, const Tolerance& tol = {});

}  // namespace repulse
