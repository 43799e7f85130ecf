#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace quasiline {

/// A point-line incidence, by dense index.
struct Flag {
  std::size_t point;
  std::size_t line;

  friend auto operator<=>(const Flag&, const Flag&) = default;
};

/// Combinatorial incidence structure C = (P, L, I).
///
/// Labels are opaque tokens. Points and lines get dense indices in the order
/// they were declared; the flag set is stored sorted and duplicate-free.
/// Every point lies on at least two lines and every line carries at least two
/// points. Instances are immutable once built.
class IncidenceStructure {
 public:
  /// Validates and builds. Duplicate flags are merged silently.
  /// Throws Error with kind DuplicateId, UnknownId or DegreeTooLow.
  static IncidenceStructure build(std::vector<std::string> points, std::vector<std::string> lines,
                                  const std::vector<std::pair<std::string, std::string>>& flags);

  /// Same as build() but with flags given by index.
  static IncidenceStructure from_indices(std::vector<std::string> points, std::vector<std::string> lines,
                                         std::vector<Flag> flags);

  std::size_t point_count() const noexcept { return point_labels_.size(); }
  std::size_t line_count() const noexcept { return line_labels_.size(); }
  std::size_t flag_count() const noexcept { return flags_.size(); }

  const std::string& point_label(std::size_t p) const { return point_labels_.at(p); }
  const std::string& line_label(std::size_t l) const { return line_labels_.at(l); }
  const std::vector<std::string>& point_labels() const noexcept { return point_labels_; }
  const std::vector<std::string>& line_labels() const noexcept { return line_labels_; }

  std::optional<std::size_t> point_index(std::string_view label) const;
  std::optional<std::size_t> line_index(std::string_view label) const;

  /// Sorted line indices through point p.
  std::span<const std::size_t> lines_of(std::size_t p) const { return lines_of_.at(p); }
  /// Sorted point indices on line l.
  std::span<const std::size_t> points_of(std::size_t l) const { return points_of_.at(l); }

  const std::vector<Flag>& flags() const noexcept { return flags_; }
  bool incident(std::size_t p, std::size_t l) const;

 private:
  IncidenceStructure() = default;

  std::vector<std::string> point_labels_;
  std::vector<std::string> line_labels_;
  std::unordered_map<std::string, std::size_t> point_lookup_;
  std::unordered_map<std::string, std::size_t> line_lookup_;
  std::vector<Flag> flags_;
  std::vector<std::vector<std::size_t>> lines_of_;
  std::vector<std::vector<std::size_t>> points_of_;
};

/// Bipartite point-line graph. Black vertices 0..b-1 are points, white
/// vertices b..b+w-1 are lines.
struct LeviGraph {
  std::vector<std::string> black_labels;
  std::vector<std::string> white_labels;
  /// (black vertex, white vertex) pairs, white already offset by black count.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t vertex_count() const noexcept { return adjacency.size(); }
  std::size_t black_count() const noexcept { return black_labels.size(); }
  bool is_black(std::size_t v) const noexcept { return v < black_labels.size(); }
  std::size_t degree(std::size_t v) const { return adjacency.at(v).size(); }
};

LeviGraph levi_graph(const IncidenceStructure& c);

/// Length of a shortest cycle, or nullopt for a forest.
std::optional<std::size_t> girth(const LeviGraph& g);

/// Inverse of levi_graph().
IncidenceStructure from_levi_graph(const LeviGraph& g);

/// True iff no two points share two or more lines.
bool is_lineal(const IncidenceStructure& c);

/// (v, r, b, k): v points of degree r, b lines of degree k.
struct ConfigurationSignature {
  std::size_t points;
  std::size_t point_degree;
  std::size_t lines;
  std::size_t line_degree;

  friend bool operator==(const ConfigurationSignature&, const ConfigurationSignature&) = default;
};

/// Present iff point degrees are all equal and line degrees are all equal.
/// Lineality is not checked here.
std::optional<ConfigurationSignature> configuration_signature(const IncidenceStructure& c);

/// point_map[p] is the image of point p of the first structure in the second.
struct Isomorphism {
  std::vector<std::size_t> point_map;
  std::vector<std::size_t> line_map;
};

/// Backtracking search refined by degrees and common-line counts.
/// Intended for structures of up to a few dozen points.
std::optional<Isomorphism> are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b);

/// Reads the "lines-of-points" text format: one line of the structure per
/// row as whitespace-separated point labels, with an optional leading
/// "name:" token. Unnamed rows become L1, L2, ... by row number. '#' starts a
/// comment. Throws ParseError on malformed rows, Error on invalid structure.
IncidenceStructure parse_lines_of_points(std::string_view text);

std::string format_lines_of_points(const IncidenceStructure& c);

}  // namespace quasiline
