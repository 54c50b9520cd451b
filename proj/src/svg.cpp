#include "repulse/svg.hpp"

#include <algorithm>
#include <set>

#include "repulse/io.hpp"

namespace repulse {
namespace {

class Canvas {
 public:
  explicit Canvas(const ConvexPolygon& polygon) {
    double lo_x = polygon.vertex(0).x, hi_x = lo_x, lo_y = polygon.vertex(0).y, hi_y = lo_y;
    for (const Point& p : polygon.vertices()) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
    const double span = std::max(hi_x - lo_x, hi_y - lo_y);
    unit_ = span / 200.0;
    const double pad = 0.08 * span;
    body_ = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(lo_x - pad) + ' ' + num(-hi_y - pad) + ' ' +
            num(hi_x - lo_x + 2 * pad) + ' ' + num(hi_y - lo_y + 2 * pad) + "\">\n" +
            "<g transform=\"scale(1,-1)\">\n";
  }

  double unit() const { return unit_; }

  void polygon(const std::vector<Point>& ring, const std::string& cls, const std::string& fill,
               const std::string& extra = {}) {
    body_ += "<polygon class=\"" + cls + "\" points=\"" + points(ring) + "\" fill=\"" + fill + "\" stroke=\"#222\"" +
             " stroke-width=\"" + num(unit_ * 0.8) + "\"" + extra + "/>\n";
  }

  void line(Point a, Point b, const std::string& cls, const std::string& stroke, double width,
            const std::string& extra = {}) {
    body_ += "<line class=\"" + cls + "\" x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
             "\" y2=\"" + num(b.y) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + num(unit_ * width) + "\"" +
             extra + "/>\n";
  }

  void polyline(const std::vector<Point>& pts, const std::string& cls, const std::string& extra = {}) {
    body_ += "<polyline class=\"" + cls + "\" points=\"" + points(pts) + "\" fill=\"none\" stroke=\"#1f6fb2\"" +
             " stroke-width=\"" + num(unit_ * 0.6) + "\"" + extra + "/>\n";
  }

  void dot(Point p, const std::string& cls, const std::string& fill, double radius, const std::string& extra = {}) {
    body_ += "<circle class=\"" + cls + "\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" +
             num(unit_ * radius) + "\" fill=\"" + fill + "\"" + extra + "/>\n";
  }

  // Arrow from a to b with a small head.
  void arrow(Point a, Point b, const std::string& cls) {
    const Point d = b - a;
    const double len = norm(d);
    if (len == 0.0) return;
    const Point u = (1.0 / len) * d;
    const Point n = left_normal(u);
    const double head = std::min(len * 0.4, unit_ * 5.0);
    const Point base = b - head * u;
    body_ += "<g class=\"" + cls + "\">";
    body_ += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(base.x) + "\" y2=\"" + num(base.y) +
             "\" stroke=\"#c0392b\" stroke-width=\"" + num(unit_ * 0.8) + "\"/>";
    body_ += "<polygon points=\"" + points({b, base + 0.5 * head * n, base - 0.5 * head * n}) + "\" fill=\"#c0392b\"/>";
    body_ += "</g>\n";
  }

  std::string finish() { return body_ + "</g>\n</svg>\n"; }

 private:
  static std::string num(double v) { return format_number(v); }
  static std::string points(const std::vector<Point>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) s += ' ';
      s += num(pts[i].x) + ',' + num(pts[i].y);
    }
    return s;
  }

  std::string body_;
  double unit_ = 1.0;
};

std::vector<Point> ring_of(const ConvexPolygon& polygon) { return {polygon.vertices().begin(), polygon.vertices().end()}; }

}  // namespace

std::string svg_flow(const ConvexPolygon& polygon, const FlowDiagram& diagram) {
  Canvas canvas(polygon);
  canvas.polygon(ring_of(polygon), "polygon", "#f4f4f4");
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point a = polygon.vertex(i);
    const Point b = polygon.vertex(i + 1);
    const EdgeFlow& f = diagram.flows[i];
    auto along = [&](double t) { return a + t * (b - a); };
    switch (f.kind) {
      case FlowKind::AllCCW: canvas.arrow(along(0.3), along(0.7), "flow-arrow"); break;
      case FlowKind::AllCW: canvas.arrow(along(0.7), along(0.3), "flow-arrow"); break;
      case FlowKind::Split:
        if (f.split_t > 0.05) canvas.arrow(along(f.split_t * 0.8), along(f.split_t * 0.2), "flow-arrow");
        if (f.split_t < 0.95) canvas.arrow(along(f.split_t + (1 - f.split_t) * 0.2), along(f.split_t + (1 - f.split_t) * 0.8), "flow-arrow");
        break;
    }
  }
  for (const SplitPoint& s : diagram.split_points) {
    canvas.dot(boundary_eval(polygon, s.location), "split-point", "#ffffff", 2.2,
               std::string(" stroke=\"#c0392b\" data-kind=\"") + to_string(s.semantics) + "\"");
  }
  for (std::size_t v : diagram.accumulation_points) canvas.dot(polygon.vertex(v), "accumulation-point", "#27ae60", 2.8);
  canvas.dot(diagram.actuator, "actuator", "#8e44ad", 3.0);
  return canvas.finish();
}

std::string svg_decomposition(const ConvexPolygon& polygon, const SlabDecomposition& decomposition,
                              const KernelRegion& kernel) {
  Canvas canvas(polygon);
  std::set<std::size_t> in_kernel;
  for (const KernelCell& k : kernel.cells) in_kernel.insert(k.cell);
  const double n = static_cast<double>(polygon.size());
  for (std::size_t c = 0; c < decomposition.cells.size(); ++c) {
    const Cell& cell = decomposition.cells[c];
    const double count = static_cast<double>(cell.slab_set.size());
    const int shade = static_cast<int>(245.0 - 200.0 * std::min(1.0, count / n));
    const std::string grey = std::to_string(shade);
    canvas.polygon(cell.ring, in_kernel.count(c) ? "cell kernel" : "cell", "rgb(" + grey + "," + grey + "," + grey + ")",
                   " data-slabs=\"" + std::to_string(cell.slab_set.size()) + "\"");
  }
  for (const Chord& chord : slab_chords(polygon)) canvas.line(chord.from, chord.to, "chord", "#2c3e50", 0.5);
  canvas.polygon(ring_of(polygon), "polygon", "none");
  return canvas.finish();
}

std::string svg_trace(const ConvexPolygon& polygon, const SimulationOutcome& outcome) {
  Canvas canvas(polygon);
  canvas.polygon(ring_of(polygon), "polygon", "#f4f4f4");
  for (std::size_t a = 0; a < outcome.activations.size(); ++a) {
    const ActivationResult& step = outcome.activations[a];
    const std::string tag = " data-activation=\"" + std::to_string(a) + "\"";
    for (const ParticleTrace& trace : step.traces) {
      std::vector<Point> path;
      for (const TraceEvent& e : trace.events) {
        if (path.empty() || !(path.back() == e.at)) path.push_back(e.at);
      }
      if (path.size() > 1) canvas.polyline(path, "trace-path", tag);
    }
    canvas.dot(step.actuator, "actuator", "#8e44ad", 3.0, tag);
  }
  for (const Point& p : outcome.occupied) canvas.dot(p, "particle", "#e67e22", 2.5);
  return canvas.finish();
}

}  // namespace repulse
