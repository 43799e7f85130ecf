#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quasiline/sweep.hpp"
#include "quasiline/wiring.hpp"

namespace quasiline {

/// Quasiline arrangement given combinatorially. Lines are 1..n.
///
/// boundary holds 2n tokens in cyclic order around the disk; each token names
/// a line, and tokens i and i+n are the two ends of the same line.
/// line_vertices[l-1] lists the vertices met by line l, read from its end at
/// the token below n towards the antipodal one. vertex_lines[v] is the sorted
/// set of lines through v.
struct AbstractArrangement {
  std::size_t n = 0;
  std::vector<std::size_t> boundary;
  std::vector<std::vector<std::size_t>> line_vertices;
  std::vector<std::vector<std::size_t>> vertex_lines;
  std::vector<std::optional<std::string>> vertex_labels;

  std::size_t vertex_count() const noexcept { return vertex_lines.size(); }
};

/// Throws Error(InvalidInput) when tokens are not antipodally paired or the
/// vertex lists disagree with vertex_lines.
void validate_arrangement(const AbstractArrangement& a);

/// Tokens are the left ends of wires 1..n then the right ends of wires 1..n;
/// vertices are events; line lists follow time order.
AbstractArrangement induced_arrangement(const WiringDiagram& d);

/// Takes `wire` as the new line at infinity and returns the remaining n-1
/// lines. The wire must cross every other wire exactly once, each time in a
/// simple (length 2) event; throws Error(InvalidInput) otherwise. Events on
/// `wire` disappear, the others keep their indices as vertex ids (so vertex
/// ids need not be contiguous; vertex_lines is empty for dropped ids).
AbstractArrangement arrangement_at_infinity(const WiringDiagram& d, std::size_t wire);

/// A marking is a gap on the boundary cycle, 0..2n-1, sitting just before
/// token g. Scanning tokens g, g+1, ... each line is oriented away from
/// whichever of its two ends is met first.
std::vector<std::vector<std::size_t>> oriented_lines(const AbstractArrangement& a, std::size_t marking);

/// Proper iff every two lines meet their common vertices in the same order.
bool is_proper_marking(const AbstractArrangement& a, std::size_t marking);

/// First proper gap, or nullopt if the arrangement is not monotone.
std::optional<std::size_t> find_monotone_marking(const AbstractArrangement& a);

SweepDigraph sweep_digraph(const AbstractArrangement& a, std::size_t marking);

struct SweptDiagram {
  WiringDiagram diagram;
  /// line_of_wire[w-1] is the arrangement line drawn as wire w.
  std::vector<std::size_t> line_of_wire;
  /// vertex_of_event[i] is the arrangement vertex drawn as event i.
  std::vector<std::size_t> vertex_of_event;
};

/// Draws a properly marked arrangement as a generalized wiring diagram by
/// sweeping its vertices in topological order. Throws Error(CyclicInput) or
/// Error(InvalidInput) when the marking is not proper.
SweptDiagram diagram_from_arrangement(const AbstractArrangement& a, std::size_t marking);

}  // namespace quasiline
