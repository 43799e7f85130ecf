#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "quasiline/embedding_scheme.hpp"
#include "quasiline/incidence.hpp"
#include "quasiline/lines.hpp"
#include "quasiline/perm_sequence.hpp"
#include "quasiline/realization.hpp"
#include "quasiline/straighten.hpp"
#include "quasiline/surface_map.hpp"
#include "quasiline/wiring.hpp"

namespace quasiline {

using Json = nlohmann::json;

// Every *_from_json throws Error(InvalidInput) on shape errors and lets the
// core constructors validate content.

Json to_json(const PermSequence& seq);
PermSequence sequence_from_json(const Json& j);

/// Sequence fields plus "points": [[move, label], ...] and "lines": wire labels.
Json to_json(const Realization& r);
Realization realization_from_json(const Json& j);

Json to_json(const WiringDiagram& d);
WiringDiagram diagram_from_json(const Json& j);

/// Coordinates as "p/q" strings.
Json to_json(const StraightDrawing& g);
StraightDrawing drawing_from_json(const Json& j);

/// {"vertices": V, "labels": [...], "edges": [[u, v], ...], "rotation": [[dart, ...], ...],
///  "signature": [...], "opposite": [...], "lines": [...]}. Edge e has dart 2e at u, 2e+1 at v.
Json to_json(const EmbeddingScheme& s);
EmbeddingScheme scheme_from_json(const Json& j);

Json to_json(const MapSummary& m);

/// {"lines": [{"label", "a", "b", "c"}], "points": [{"label", "x", "y"}]}; numbers may
/// be JSON integers or rational strings.
struct GeoInput {
  std::vector<GeoLine> lines;
  std::vector<SelectedPoint> points;
};
GeoInput geo_from_json(const Json& j);
Json to_json(const GeoInput& g);

/// {"line_numbering": {line: wire}, "point_order": [point, ...], "line_orders": {point: [line, ...]}}.
/// Missing keys fall back to default_plan(c).
RealizationPlan plan_from_json(const IncidenceStructure& c, const Json& j);
Json plan_to_json(const IncidenceStructure& c, const RealizationPlan& plan);

/// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const Json& j);

std::string read_text_file(const std::string& path);

}  // namespace quasiline
