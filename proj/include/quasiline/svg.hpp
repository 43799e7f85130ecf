#pragma once

#include <string>

#include "quasiline/straighten.hpp"
#include "quasiline/wiring.hpp"

namespace quasiline {

/// Wires as polylines over event slots; designated crossings are filled
/// disks, unwanted crossings open circles.
std::string diagram_svg(const WiringDiagram& d);

/// The straightened drawing. Exact coordinates are multiplied by the scale
/// recorded in the root element's data-scale attribute.
std::string drawing_svg(const WiringDiagram& d, const StraightDrawing& g);

}  // namespace quasiline
