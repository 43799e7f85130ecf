#pragma once

#include <cstddef>
#include <vector>

#include "quasiline/embedding_scheme.hpp"
#include "quasiline/wiring.hpp"

namespace quasiline {

/// Cell complex of the diagram in the projective plane. Vertices are events.
/// Each wire contributes one edge per pair of consecutive events (signature
/// +1) and one edge through infinity from its last event back to its first
/// (signature -1). Darts at an event whose window holds w_s..w_e are, in
/// counterclockwise order: right darts of w_s..w_e, then left darts of w_s..w_e.
EmbeddingScheme disk_scheme(const WiringDiagram& d);

/// The edge of disk_scheme(d) through infinity, per wire (index w-1).
std::vector<std::size_t> infinity_edges(const WiringDiagram& d);

struct DiskFace {
  std::vector<std::size_t> darts;
  std::vector<std::size_t> vertices;
  std::size_t length() const noexcept { return darts.size(); }
};

std::vector<DiskFace> trace_faces_disk(const WiringDiagram& d);

/// Faces bounded by exactly two edges.
std::vector<DiskFace> detect_digons(const WiringDiagram& d);

}  // namespace quasiline
