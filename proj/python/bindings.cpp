#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "repulse/flow.hpp"
#include "repulse/io.hpp"
#include "repulse/kernel.hpp"
#include "repulse/linear_gather.hpp"
#include "repulse/planner.hpp"
#include "repulse/random.hpp"
#include "repulse/simulator.hpp"
#include "repulse/svg.hpp"

namespace py = pybind11;
using namespace repulse;

namespace {

using XY = std::pair<double, double>;

Point to_point(XY p) { return {p.first, p.second}; }
py::tuple to_tuple(Point p) { return py::make_tuple(p.x, p.y); }
py::tuple to_tuple(const BoundaryPoint& b) { return py::make_tuple(b.edge, b.t); }

py::list to_list(std::span<const Point> pts) {
  py::list out;
  for (const Point& p : pts) out.append(to_tuple(p));
  return out;
}

Tolerance make_tol(double tol) { return {tol, tol}; }

Direction parse_direction(const std::string& name) {
  if (name == "ccw") return Direction::CCW;
  if (name == "cw") return Direction::CW;
  throw Error(ErrorKind::InvalidInput, "direction must be 'ccw' or 'cw'");
}

py::dict plan_dict(const GatherPlan& plan) {
  py::dict d;
  d["verdict"] = to_string(plan.verdict);
  d["activations"] = to_list(plan.activations);
  d["gather"] = plan.predicted_gather ? py::cast(*plan.predicted_gather) : py::none();
  d["rationale"] = to_string(plan.rationale);
  return d;
}

py::dict outcome_dict(const SimulationOutcome& outcome) {
  py::dict d;
  d["gathered"] = outcome.gathered;
  d["gather_point"] = outcome.gather_point ? py::object(to_tuple(*outcome.gather_point)) : py::none();
  d["occupied"] = to_list(outcome.occupied);
  return d;
}

}  // namespace

PYBIND11_MODULE(_repulse, m) {
  m.doc() = "Repulsion gathering in convex polygons";

  static py::handle error_type = PyErr_NewException("repulse.RepulseError", PyExc_ValueError, nullptr);
  m.attr("RepulseError") = error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = error_type(e.what());
      err.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type.ptr(), err.ptr());
    }
  });

  py::class_<ConvexPolygon>(m, "Polygon")
      .def(py::init([](const std::vector<XY>& vertices, double tol) {
             std::vector<Point> pts;
             for (const XY& v : vertices) pts.push_back(to_point(v));
             return ConvexPolygon::validate(std::move(pts), make_tol(tol));
           }),
           py::arg("vertices"), py::arg("tol") = 1e-9)
      .def_static("parse", [](const std::string& text, double tol) { return parse_polygon(text, make_tol(tol)); },
                  py::arg("text"), py::arg("tol") = 1e-9)
      .def_static("random",
                  [](std::size_t n, std::uint64_t seed) {
                    std::mt19937_64 rng(seed);
                    return random_convex_polygon(n, rng);
                  },
                  py::arg("n"), py::arg("seed") = 1)
      .def_property_readonly("vertices", [](const ConvexPolygon& p) { return to_list(p.vertices()); })
      .def_property_readonly("perimeter", &ConvexPolygon::perimeter)
      .def_property_readonly("area", &ConvexPolygon::area)
      .def("__len__", &ConvexPolygon::size)
      .def("contains", [](const ConvexPolygon& p, XY w) { return p.contains(to_point(w)); })
      .def("__str__", [](const ConvexPolygon& p) { return format_polygon(p.vertices()); });

  m.def("count_acute", [](const ConvexPolygon& p, double tol) { return count_acute(p, make_tol(tol)); },
        py::arg("polygon"), py::arg("tol") = 1e-9);

  m.def("slab_membership",
        [](const ConvexPolygon& p, XY w, double tol) { return slab_membership(p, to_point(w), make_tol(tol)); },
        py::arg("polygon"), py::arg("w"), py::arg("tol") = 1e-9);

  m.def(
      "flow",
      [](const ConvexPolygon& p, XY w, double tol) {
        const FlowDiagram diagram = flow_diagram(p, to_point(w), make_tol(tol));
        py::dict d;
        d["actuator"] = to_tuple(diagram.actuator);
        py::list splits;
        for (const SplitPoint& s : diagram.split_points) {
          splits.append(py::make_tuple(s.location.edge, s.location.t, to_string(s.semantics)));
        }
        d["split_points"] = splits;
        d["accumulation_points"] = diagram.accumulation_points;
        d["text"] = format_flow(p, diagram);
        return d;
      },
      py::arg("polygon"), py::arg("w"), py::arg("tol") = 1e-9);

  m.def(
      "flow_svg", [](const ConvexPolygon& p, XY w) { return svg_flow(p, flow_diagram(p, to_point(w))); },
      py::arg("polygon"), py::arg("w"));

  m.def("gather_target", [](const ConvexPolygon& p, XY w) { return gather_target(p, to_point(w)); },
        py::arg("polygon"), py::arg("w"));

  m.def(
      "kernel",
      [](const ConvexPolygon& p, double tol) {
        py::list cells;
        for (const KernelCell& c : repulsion_kernel(p, make_tol(tol)).cells) {
          py::dict d;
          d["cell"] = c.cell;
          d["ring"] = to_list(c.ring);
          d["sample"] = to_tuple(c.sample);
          d["gather_vertex"] = c.gather_vertex;
          cells.append(d);
        }
        return cells;
      },
      py::arg("polygon"), py::arg("tol") = 1e-9);

  m.def(
      "accumulation_map",
      [](const ConvexPolygon& p, const std::string& direction, double tol) {
        py::list arcs;
        for (const AccumulationArc& a : accumulation_map(p, parse_direction(direction), make_tol(tol)).arcs) {
          arcs.append(py::make_tuple(to_tuple(a.start), to_tuple(a.end), a.vertex));
        }
        return arcs;
      },
      py::arg("polygon"), py::arg("direction") = "ccw", py::arg("tol") = 1e-9);

  m.def(
      "first_accumulation",
      [](const ConvexPolygon& p, std::size_t edge, double t, const std::string& direction) {
        return first_accumulation(p, canonical_boundary_point(p, edge, t), parse_direction(direction));
      },
      py::arg("polygon"), py::arg("edge"), py::arg("t"), py::arg("direction") = "ccw");

  m.def(
      "find_gather_point",
      [](const ConvexPolygon& p, double tol) -> py::object {
        const auto witness = find_gather_point(p, make_tol(tol));
        if (!witness) return py::none();
        return py::make_tuple(witness->location.edge, witness->location.t, witness->gather_vertex);
      },
      py::arg("polygon"), py::arg("tol") = 1e-9);

  m.def("plan", [](const ConvexPolygon& p, double tol) { return plan_dict(plan_gather(p, make_tol(tol))); },
        py::arg("polygon"), py::arg("tol") = 1e-9);

  m.def(
      "simulate",
      [](const ConvexPolygon& p, const std::vector<XY>& actuators, std::size_t samples, double tol) {
        std::vector<Point> act;
        for (const XY& a : actuators) act.push_back(to_point(a));
        return outcome_dict(simulate_sequence(p, act, Seeding::boundary_sampled(samples), make_tol(tol)));
      },
      py::arg("polygon"), py::arg("actuators"), py::arg("samples") = 0, py::arg("tol") = 1e-9);
}
