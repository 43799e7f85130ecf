#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace quasiline {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// Graph with a rotation system and an edge signature, i.e. a map on a closed
/// surface. Edge e owns darts 2e and 2e+1; a dart sits at one end of its edge
/// and its twin is d ^ 1. A loop has both darts at the same vertex.
struct EmbeddingScheme {
  std::size_t vertex_count = 0;
  std::vector<std::size_t> dart_vertex;
  /// +1 or -1 per edge.
  std::vector<int> signature;
  /// Counterclockwise cyclic order of darts around each vertex.
  std::vector<std::vector<std::size_t>> rotation;
  /// Dart continuing the same line through the vertex, or npos if unknown.
  std::vector<std::size_t> opposite;
  /// Optional per-edge line number (empty when not tracked).
  std::vector<std::size_t> edge_line;
  std::vector<std::string> vertex_labels;

  std::size_t edge_count() const noexcept { return signature.size(); }
  std::size_t dart_count() const noexcept { return dart_vertex.size(); }
  static constexpr std::size_t twin(std::size_t d) noexcept { return d ^ 1U; }
  static constexpr std::size_t edge_of(std::size_t d) noexcept { return d >> 1U; }
};

/// Throws Error(InvalidScheme) if the rotation lists do not partition the darts
/// by vertex, a signature is not +-1, or the opposite map is not an involution
/// at a fixed vertex.
void validate_scheme(const EmbeddingScheme& s);

/// position[d] is d's index in the rotation list of its vertex.
std::vector<std::size_t> rotation_positions(const EmbeddingScheme& s);

/// A facial walk: the darts leaving each corner in traversal order.
struct Face {
  std::vector<std::size_t> darts;
  std::size_t length() const noexcept { return darts.size(); }
};

/// Signed face tracing. From a dart d with current sign sigma, cross its edge,
/// multiply sigma by the edge signature, then turn to the next dart around the
/// far vertex (counterclockwise if sigma = +1, clockwise otherwise). Each face
/// is reported once, in one of its two traversal directions.
std::vector<Face> trace_faces(const EmbeddingScheme& s);

bool is_connected(const EmbeddingScheme& s);

/// Vertex signs making every tree edge positive after switching. Throws
/// Error(Disconnected).
std::vector<int> switching_signs(const EmbeddingScheme& s);

/// True iff every cycle carries an even number of negative edges.
/// Throws Error(Disconnected).
bool is_orientable(const EmbeddingScheme& s);

/// Local switch at v: reverse its rotation and negate its non-loop edges.
/// The surface and its faces are unchanged.
EmbeddingScheme switch_vertex(const EmbeddingScheme& s, std::size_t v);

/// Moves vertex v to position perm[v].
EmbeddingScheme relabel_vertices(const EmbeddingScheme& s, const std::vector<std::size_t>& perm);

}  // namespace quasiline
