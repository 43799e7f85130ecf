#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "quasiline/rational.hpp"
#include "quasiline/wiring.hpp"

namespace quasiline {

/// The line a*x + b*y = c.
struct GeoLine {
  Rational a;
  Rational b;
  Rational c;
  std::string label;
};

struct SelectedPoint {
  std::string label;
  Point2 at;
};

using Chart = std::array<std::array<Rational, 3>, 3>;

struct LinesDiagram {
  WiringDiagram diagram;
  /// line_of_wire[w-1] is the input index of the line drawn as wire w.
  std::vector<std::size_t> line_of_wire;
  /// Projective map (acting on column vectors (x, y, 1)) that was applied.
  Chart chart;
  /// 0 for the identity chart; counts the candidates tried.
  std::size_t chart_attempts;
};

/// Sweeps an arrangement of straight lines left to right with exact
/// arithmetic. Charts are tried in a fixed order (identity first, then a few
/// fixed projective maps, then maps drawn from `seed`) until no line is
/// vertical, no two lines are parallel, no selected point lies at infinity
/// and distinct crossings have distinct x-coordinates. Lines are stacked by
/// slope on the left. Crossings at one point merge into one event; selected
/// points become designated events.
///
/// Throws Error(DuplicateLine), Error(InvalidInput) for a degenerate line or a
/// selected point on fewer than two lines, Error(UnresolvableChart).
LinesDiagram diagram_from_lines(const std::vector<GeoLine>& lines, const std::vector<SelectedPoint>& points,
                                std::uint64_t seed = 20240607);

/// Every point where at least two lines meet (in the identity chart, ignoring
/// parallels), with the sorted indices of lines through it.
std::vector<std::pair<Point2, std::vector<std::size_t>>> intersection_points(const std::vector<GeoLine>& lines);

}  // namespace quasiline
