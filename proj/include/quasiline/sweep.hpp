#pragma once

#include <cstddef>
#include <vector>

#include "quasiline/wiring.hpp"

namespace quasiline {

struct Arc {
  std::size_t from;
  std::size_t to;
  /// Line (wire) carrying the arc, 1-based; 0 for hand-built arcs.
  std::size_t line;
};

/// Vertices are crossings; arcs join crossings consecutive along a line,
/// pointing in the line's orientation, never through infinity.
struct SweepDigraph {
  std::size_t vertex_count = 0;
  std::vector<Arc> arcs;
};

SweepDigraph sweep_digraph(const WiringDiagram& d);

bool is_acyclic(const SweepDigraph& g);

/// Kahn's algorithm, smallest ready vertex first. Throws Error(CyclicInput).
std::vector<std::size_t> topological_order(const SweepDigraph& g);

/// A vertex order in which each prefix is swept by a valid cut.
std::vector<std::size_t> topological_sweep(const WiringDiagram& d);

}  // namespace quasiline
