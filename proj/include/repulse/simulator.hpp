#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "repulse/geometry.hpp"

namespace repulse {

struct GatherPlan;

using ParticlePosition = std::variant<Point, BoundaryPoint>;

struct Particle {
  std::size_t id = 0;
  ParticlePosition position;
  std::size_t weight = 1;  // number of coalesced particles
};

struct ParticleSystem {
  std::vector<Particle> particles;

  std::size_t total_weight() const;
  // Distinct occupied locations, in particle order.
  std::vector<Point> occupied(const ConvexPolygon& polygon) const;
};

// How to seed the polygon. Vertex particles alone decide gathering; the
// extra edge particles exist to stress that reduction.
struct Seeding {
  std::size_t per_edge = 0;

  static Seeding vertices_only() { return {0}; }
  static Seeding boundary_sampled(std::size_t k) { return {k}; }
};

ParticleSystem initial_particles(const ConvexPolygon& polygon, Seeding seeding);

enum class TraceEventKind { Start, Radial, Walk, PassThrough, Rest };

const char* to_string(TraceEventKind kind);

struct TraceEvent {
  TraceEventKind kind = TraceEventKind::Start;
  Point at;
};

struct ParticleTrace {
  std::size_t particle = 0;
  std::vector<TraceEvent> events;
  BoundaryPoint rest;  // always a vertex
};

Point position_of(const ConvexPolygon& polygon, const ParticlePosition& position);

// Moves one particle under an activation at w until it rests.
ParticleTrace repel_particle(const ConvexPolygon& polygon, Point w, const ParticlePosition& position,
                             const Tolerance& tol = {});

struct ActivationResult {
  Point actuator;
  ParticleSystem system;
  std::vector<ParticleTrace> traces;
};

// `first` removes the particle under the actuator; otherwise the actuator
// must be placed on an empty point.
ActivationResult simulate_activation(const ConvexPolygon& polygon, Point w, const ParticleSystem& system,
                                     bool first, const Tolerance& tol = {});

struct SimulationOutcome {
  bool gathered = false;
  std::optional<Point> gather_point;
  std::vector<Point> occupied;
  std::vector<ActivationResult> activations;
};

SimulationOutcome simulate_sequence(const ConvexPolygon& polygon, std::span<const Point> actuators,
                                    Seeding seeding, const Tolerance& tol = {});
SimulationOutcome simulate_plan(const ConvexPolygon& polygon, const GatherPlan& plan, Seeding seeding,
                                const Tolerance& tol = {});

// `particle_id event_kind x y`, one event per line.
void write_trace_log(std::ostream& out, const SimulationOutcome& outcome);

}  // namespace repulse
