#pragma once

#include <cstdint>
#include <random>

#include "repulse/geometry.hpp"

namespace repulse {

// Uniformly random convex polygon (Valtr's construction) with vertices in
// [0, 1]^2. Draws again whenever validation rejects the result.
ConvexPolygon random_convex_polygon(std::size_t n, std::mt19937_64& rng, const Tolerance& tol = {});

// Vertices jittered around an axis-aligned ellipse; stays well conditioned
// for large n where Valtr's polygons become nearly degenerate.
ConvexPolygon random_ellipse_polygon(std::size_t n, std::mt19937_64& rng, const Tolerance& tol = {});

}  // namespace repulse
