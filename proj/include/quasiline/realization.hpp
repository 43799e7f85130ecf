#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "quasiline/incidence.hpp"
#include "quasiline/perm_sequence.hpp"

namespace quasiline {

/// How to turn an incidence structure into a sequence. All entries are dense
/// indices into the structure.
struct RealizationPlan {
  /// line_numbering[l] is the wire number (1..n) of line l.
  std::vector<std::size_t> line_numbering;
  /// Every point exactly once.
  std::vector<std::size_t> point_order;
  /// point_line_orders[p]: the lines through p, top to bottom just before p's move.
  std::vector<std::vector<std::size_t>> point_line_orders;
};

struct Realization {
  PermSequence seq;
  /// designated move index (1-based) -> point label
  std::map<std::size_t, std::string> point_of_move;
  /// wire_labels[w-1] is the line label carried by wire w
  std::vector<std::string> wire_labels;
};

/// Lines numbered in input order, increasing line order at each point, and a
/// greedy point order: the next point is the one needing the fewest bridging
/// transpositions from the current permutation (ties by input order).
RealizationPlan default_plan(const IncidenceStructure& c);

/// Throws Error(PlanMismatch) when the plan does not describe c.
void check_plan(const IncidenceStructure& c, const RealizationPlan& plan);

/// Builds a generalized allowable sequence with one designated move per point.
/// Between designated moves only adjacent transpositions are inserted.
Realization realize(const IncidenceStructure& c, const RealizationPlan& plan);

/// Sum of C(|M|,2) over non-designated moves.
std::size_t unwanted_crossing_count(const Realization& r);
std::size_t unwanted_crossing_count(const PermSequence& seq);

/// C(n,2) - n*C(k,2); the number of unwanted crossings forced in any
/// realization of an (n_k) configuration without extra crossings per pair.
long long topological_unwanted_bound(std::size_t n, std::size_t k);

}  // namespace quasiline
