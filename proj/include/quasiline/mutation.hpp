#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "quasiline/wiring.hpp"

namespace quasiline {

/// Pushes the wires at positions p and p+1 across each other and back,
/// creating a digon just before event `slot` (slot = size() appends).
WiringDiagram insert_digon(const WiringDiagram& d, std::size_t position, std::size_t slot);

/// Removes the digon bounded by events first < second: both must be simple
/// crossings at the same positions p, p+1 with nothing touching those
/// positions in between. Throws Error(NotAdmissible) if either is designated,
/// Error(NoSuchFace) if they do not bound a digon.
WiringDiagram remove_digon(const WiringDiagram& d, std::size_t first, std::size_t second);

/// Passes one wire across the crossing of two others. The events must read
/// (p,2)(p+1,2)(p,2) or (p+1,2)(p,2)(p+1,2) with nothing touching positions
/// p..p+2 in between; they are rewritten to the other form in place.
/// Errors as for remove_digon.
WiringDiagram triangle_move(const WiringDiagram& d, std::array<std::size_t, 3> events);

/// Event pairs accepted by remove_digon, designated ones included.
std::vector<std::pair<std::size_t, std::size_t>> digon_candidates(const WiringDiagram& d);

/// Event triples shaped for triangle_move, designated ones included.
std::vector<std::array<std::size_t, 3>> triangle_candidates(const WiringDiagram& d);

}  // namespace quasiline
