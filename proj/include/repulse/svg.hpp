#pragma once

#include <string>

#include "repulse/flow.hpp"
#include "repulse/kernel.hpp"
#include "repulse/simulator.hpp"

namespace repulse {

// Static figures in a y-up frame. Element classes: polygon, flow-arrow,
// split-point, accumulation-point, actuator, cell, chord, trace-path,
// particle.
std::string svg_flow(const ConvexPolygon& polygon, const FlowDiagram& diagram);
// Cells shaded by slab count; kernel cells additionally tagged `kernel`.
std::string svg_decomposition(const ConvexPolygon& polygon, const SlabDecomposition& decomposition,
                              const KernelRegion& kernel);
std::string svg_trace(const ConvexPolygon& polygon, const SimulationOutcome& outcome);

}  // namespace repulse
