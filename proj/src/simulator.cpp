#include "repulse/simulator.hpp"

#include <limits>
#include <ostream>

#include "repulse/flow.hpp"
#include "repulse/io.hpp"
#include "repulse/planner.hpp"

namespace repulse {
namespace {

BoundaryPoint radial_exit(const ConvexPolygon& polygon, Point w, Point p, const Tolerance& tol) {
  const Point dir = (1.0 / distance(w, p)) * (p - w);
  double limit = std::numeric_limits<double>::infinity();
  std::size_t hit = 0;
  for (std::size_t j = 0; j < polygon.size(); ++j) {
    const Point d = polygon.edge_vector(j);
    const double b = cross(d, dir);
    if (b >= 0.0) continue;
    const double a = std::max(0.0, cross(d, p - polygon.vertex(j)));
    const double lambda = a / -b;
    if (lambda < limit) {
      limit = lambda;
      hit = j;
    }
  }
  const Point q = p + limit * dir;
  if (auto located = boundary_locate(polygon, q, tol)) return *located;
  const Point d = polygon.edge_vector(hit);
  const double t = std::clamp(dot(q - polygon.vertex(hit), d) / dot(d, d), 0.0, 1.0);
  return canonical_boundary_point(polygon, hit, t);
}

}  // namespace

const char* to_string(TraceEventKind kind) {
  switch (kind) {
    case TraceEventKind::Start: return "start";
    case TraceEventKind::Radial: return "radial";
    case TraceEventKind::Walk: return "walk";
    case TraceEventKind::PassThrough: return "pass";
    case TraceEventKind::Rest: return "rest";
  }
  return "?";
}

std::size_t ParticleSystem::total_weight() const {
  std::size_t total = 0;
  for (const Particle& p : particles) total += p.weight;
  return total;
}

Point position_of(const ConvexPolygon& polygon, const ParticlePosition& position) {
  if (const auto* b = std::get_if<BoundaryPoint>(&position)) return boundary_eval(polygon, *b);
  return std::get<Point>(position);
}

std::vector<Point> ParticleSystem::occupied(const ConvexPolygon& polygon) const {
  std::vector<Point> out;
  for (const Particle& particle : particles) {
    const Point p = position_of(polygon, particle.position);
    bool fresh = true;
    for (const Point& q : out) fresh = fresh && distance(p, q) > Tolerance{}.abs;
    if (fresh) out.push_back(p);
  }
  return out;
}

ParticleSystem initial_particles(const ConvexPolygon& polygon, Seeding seeding) {
  ParticleSystem out;
  std::size_t id = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) out.particles.push_back({id++, BoundaryPoint{i, 0.0}, 1});
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    for (std::size_t j = 1; j <= seeding.per_edge; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(seeding.per_edge + 1);
      out.particles.push_back({id++, BoundaryPoint{i, t}, 1});
    }
  }
  return out;
}

ParticleTrace repel_particle(const ConvexPolygon& polygon, Point w, const ParticlePosition& position,
                             const Tolerance& tol) {
  const std::size_t n = polygon.size();
  const Point start = position_of(polygon, position);
  if (distance(start, w) <= tol.abs) {
    throw Error(ErrorKind::InvalidInput, "particle sits on the actuator");
  }
  ParticleTrace trace;
  trace.events.push_back({TraceEventKind::Start, start});

  BoundaryPoint on_boundary;
  if (const auto* b = std::get_if<BoundaryPoint>(&position)) {
    on_boundary = *b;
  } else if (auto located = boundary_locate(polygon, start, tol)) {
    on_boundary = *located;
  } else {
    if (!polygon.contains(start, tol)) throw Error(ErrorKind::InvalidInput, "particle lies outside the polygon");
    on_boundary = radial_exit(polygon, w, start, tol);
    trace.events.push_back({TraceEventKind::Radial, boundary_eval(polygon, on_boundary)});
  }

  auto foot = [&](std::size_t edge) { return foot_parameter(polygon, edge, w, tol); };
  auto record = [&](TraceEventKind kind, std::size_t v) { trace.events.push_back({kind, polygon.vertex(v)}); };

  int dir = 0;        // +1 ccw, -1 cw
  std::size_t v = 0;  // vertex the particle is at or heading to
  if (on_boundary.t > 0.0) {
    const std::size_t k = on_boundary.edge;
    const double t_star = foot(k);
    if (std::abs(on_boundary.t - t_star) * polygon.edge_length(k) <= tol.abs) {
      // Flat point on the edge: leave counterclockwise.
      trace.events.push_back({TraceEventKind::PassThrough, boundary_eval(polygon, on_boundary)});
      dir = +1;
    } else {
      dir = on_boundary.t > t_star ? +1 : -1;
    }
    v = dir > 0 ? polygon.next(k) : k;
    record(TraceEventKind::Walk, v);
  } else {
    v = on_boundary.edge;
    const double ahead = foot(v);
    const double behind = foot(polygon.prev(v));
    const bool ccw_ok = ahead <= 0.0;
    const bool cw_ok = behind >= 1.0;
    if (ccw_ok || cw_ok) {
      if (ccw_ok && cw_ok) {
        const bool ccw_strict = ahead < 0.0;
        const bool cw_strict = behind > 1.0;
        dir = (cw_strict && !ccw_strict) ? -1 : +1;
      } else {
        dir = ccw_ok ? +1 : -1;
      }
      const bool flat = dir > 0 ? ahead == 0.0 : behind == 1.0;
      if (flat) record(TraceEventKind::PassThrough, v);
      v = dir > 0 ? polygon.next(v) : polygon.prev(v);
      record(TraceEventKind::Walk, v);
    }
  }

  if (dir != 0) {
    for (std::size_t steps = 0;; ++steps) {
      if (steps > n) throw Error(ErrorKind::Internal, "particle walk did not terminate");
      const double f = dir > 0 ? foot(v) : foot(polygon.prev(v));
      const bool keep_going = dir > 0 ? f <= 0.0 : f >= 1.0;
      if (!keep_going) break;
      if (f == (dir > 0 ? 0.0 : 1.0)) record(TraceEventKind::PassThrough, v);
      v = dir > 0 ? polygon.next(v) : polygon.prev(v);
      record(TraceEventKind::Walk, v);
    }
  }
  record(TraceEventKind::Rest, v);
  trace.rest = {v, 0.0};
  return trace;
}

ActivationResult simulate_activation(const ConvexPolygon& polygon, Point w, const ParticleSystem& system,
                                     bool first, const Tolerance& tol) {
  require_inside(polygon, w, tol);
  ActivationResult out;
  out.actuator = w;
  std::vector<std::ptrdiff_t> slot(polygon.size(), -1);
  for (const Particle& particle : system.particles) {
    if (distance(position_of(polygon, particle.position), w) <= tol.abs) {
      if (first) continue;
      throw Error(ErrorKind::ActuatorOnParticle, "actuator placed on an occupied point");
    }
  }
  for (const Particle& particle : system.particles) {
    if (distance(position_of(polygon, particle.position), w) <= tol.abs) continue;
    ParticleTrace trace = repel_particle(polygon, w, particle.position, tol);
    trace.particle = particle.id;
    const std::size_t v = trace.rest.edge;
    if (slot[v] < 0) {
      slot[v] = static_cast<std::ptrdiff_t>(out.system.particles.size());
      out.system.particles.push_back({particle.id, trace.rest, particle.weight});
    } else {
      Particle& merged = out.system.particles[static_cast<std::size_t>(slot[v])];
      merged.weight += particle.weight;
      merged.id = std::min(merged.id, particle.id);
    }
    out.traces.push_back(std::move(trace));
  }
  return out;
}

SimulationOutcome simulate_sequence(const ConvexPolygon& polygon, std::span<const Point> actuators,
                                    Seeding seeding, const Tolerance& tol) {
  if (actuators.empty()) throw Error(ErrorKind::InvalidInput, "no activations to simulate");
  SimulationOutcome out;
  ParticleSystem system = initial_particles(polygon, seeding);
  for (std::size_t i = 0; i < actuators.size(); ++i) {
    ActivationResult step = simulate_activation(polygon, actuators[i], system, i == 0, tol);
    system = step.system;
    out.activations.push_back(std::move(step));
  }
  out.occupied = system.occupied(polygon);
  out.gathered = out.occupied.size() == 1;
  if (out.gathered) out.gather_point = out.occupied.front();
  return out;
}

SimulationOutcome simulate_plan(const ConvexPolygon& polygon, const GatherPlan& plan, Seeding seeding,
                                const Tolerance& tol) {
  if (plan.activations.empty()) throw Error(ErrorKind::InvalidInput, "plan has no activations");
  return simulate_sequence(polygon, plan.activations, seeding, tol);
}

void write_trace_log(std::ostream& out, const SimulationOutcome& outcome) {
  for (std::size_t a = 0; a < outcome.activations.size(); ++a) {
    const ActivationResult& step = outcome.activations[a];
    out << "# activation " << a << ' ' << format_number(step.actuator.x) << ' '
        << format_number(step.actuator.y) << '\n';
    for (const ParticleTrace& trace : step.traces) {
      for (const TraceEvent& event : trace.events) {
        out << trace.particle << ' ' << to_string(event.kind) << ' ' << format_number(event.at.x) << ' '
            << format_number(event.at.y) << '\n';
      }
    }
  }
}

}  // namespace repulse
