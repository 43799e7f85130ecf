#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quasiline/rational.hpp"
#include "quasiline/wiring.hpp"

namespace quasiline {

/// Straight-line drawing of a digon-free diagram. Every event is a point,
/// every wire runs straight between consecutive events, and the part of a
/// wire through infinity is drawn as the two outward rays of the line through
/// its first and last events.
struct StraightDrawing {
  std::vector<Point2> vertices;
  /// wires[w-1]: events along wire w in order; consecutive pairs are segments.
  std::vector<std::vector<std::size_t>> wires;
  /// chords[w-1] = (first event, last event) of wire w.
  std::vector<std::pair<std::size_t, std::size_t>> chords;
  /// Outer face of the crossing graph, counterclockwise; these sit on a circle.
  std::vector<std::size_t> outer;
  /// "barycentric" or "triangulated-barycentric".
  std::string method;
};

/// Crossing graph: events joined by finite wire segments, as adjacency lists.
std::vector<std::vector<std::size_t>> crossing_graph(const WiringDiagram& d);

bool is_two_connected(const std::vector<std::vector<std::size_t>>& adjacency);

/// Throws Error(HasDigons) if the diagram has a digon face, and
/// Error(NotTwoConnected) if the crossing graph is not 2-connected.
StraightDrawing straighten(const WiringDiagram& d);

struct DrawingAudit {
  bool segments_disjoint = false;
  bool rotations_match = false;
  bool chords_cross_inside = false;
  bool faces_match = false;
  std::string detail;

  bool ok() const noexcept { return segments_disjoint && rotations_match && chords_cross_inside && faces_match; }
};

/// Re-derives the combinatorics of the drawing from its coordinates alone and
/// compares with d: no two segments meet except at shared ends, the angular
/// order at each event matches the diagram, every two chords meet inside the
/// polygon, and the faces traced from the geometry are the faces of d.
DrawingAudit audit_drawing(const WiringDiagram& d, const StraightDrawing& drawing);

}  // namespace quasiline
