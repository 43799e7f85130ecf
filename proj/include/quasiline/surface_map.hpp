#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quasiline/embedding_scheme.hpp"
#include "quasiline/wiring.hpp"

namespace quasiline {

/// The map M(Q): vertices are the designated events of d, edges join
/// designated events consecutive along a wire, and each wire closes up through
/// infinity with one edge of signature -1. Rotations are read counterclockwise
/// from the drawing as in disk_scheme(). Throws Error(WireWithoutPoint).
EmbeddingScheme scheme_from_diagram(const WiringDiagram& d);

struct MapSummary {
  std::size_t V = 0;
  std::size_t E = 0;
  std::size_t F = 0;
  long long euler = 0;
  bool orientable = false;
  long long genus = 0;
  /// ascending
  std::vector<std::size_t> face_vector;
  std::string fingerprint;

  friend bool operator==(const MapSummary&, const MapSummary&) = default;
};

/// Throws Error(Disconnected) for a disconnected scheme.
MapSummary trace_and_summarize(const EmbeddingScheme& s);

/// A closed walk given by the darts it leaves through, in order.
struct Walk {
  std::vector<std::size_t> darts;
};

/// Leaves each vertex through the dart opposite the one it arrived by.
/// Needs the opposite pairing; throws Error(InvalidScheme) without it.
std::vector<Walk> straight_ahead_walks(const EmbeddingScheme& s);

/// Number of signature -1 edges along the walk.
std::size_t negative_edges(const EmbeddingScheme& s, const Walk& w);

/// True iff the walk meets no vertex twice.
bool is_simple(const EmbeddingScheme& s, const Walk& w);

}  // namespace quasiline
