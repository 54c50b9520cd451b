#include "repulse/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace repulse {
namespace {

// Splits sorted coordinates into two chains and returns the edge components.
std::vector<double> chain_components(std::vector<double> xs, std::mt19937_64& rng) {
  std::sort(xs.begin(), xs.end());
  std::bernoulli_distribution coin(0.5);
  const double lo = xs.front();
  const double hi = xs.back();
  double top = lo, bottom = lo;
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    if (coin(rng)) {
      out.push_back(xs[i] - top);
      top = xs[i];
    } else {
      out.push_back(bottom - xs[i]);
      bottom = xs[i];
    }
  }
  out.push_back(hi - top);
  out.push_back(bottom - hi);
  return out;
}

std::vector<Point> valtr(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> xs(n), ys(n);
  for (auto& x : xs) x = unit(rng);
  for (auto& y : ys) y = unit(rng);
  const std::vector<double> dx = chain_components(xs, rng);
  std::vector<double> dy = chain_components(ys, rng);
  std::shuffle(dy.begin(), dy.end(), rng);

  std::vector<Point> steps(n);
  for (std::size_t i = 0; i < n; ++i) steps[i] = {dx[i], dy[i]};
  std::sort(steps.begin(), steps.end(),
            [](Point a, Point b) { return std::atan2(a.y, a.x) < std::atan2(b.y, b.x); });

  std::vector<Point> pts(n);
  Point at{};
  Point low{};
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = at;
    low = {std::min(low.x, at.x), std::min(low.y, at.y)};
    at = at + steps[i];
  }
  const double min_x = *std::min_element(xs.begin(), xs.end());
  const double min_y = *std::min_element(ys.begin(), ys.end());
  for (Point& p : pts) p = p - low + Point{min_x, min_y};
  return pts;
}

}  // namespace

ConvexPolygon random_convex_polygon(std::size_t n, std::mt19937_64& rng, const Tolerance& tol) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "a polygon needs at least 3 vertices");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    try {
      return ConvexPolygon::validate(valtr(n, rng), tol);
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::Internal, "random polygon generation kept producing degenerate output");
}

ConvexPolygon random_ellipse_polygon(std::size_t n, std::mt19937_64& rng, const Tolerance& tol) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "a polygon needs at least 3 vertices");
  std::uniform_real_distribution<double> jitter(0.1, 0.9);
  std::uniform_real_distribution<double> aspect(0.5, 1.0);
  const double b = aspect(rng);
  std::vector<Point> pts(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = (static_cast<double>(j) + jitter(rng)) * 2.0 * std::numbers::pi / static_cast<double>(n);
    pts[j] = {std::cos(theta), b * std::sin(theta)};
  }
  return ConvexPolygon::validate(std::move(pts), tol);
}

}  // namespace repulse
