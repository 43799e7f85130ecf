#include "quasiline/io.hpp"

#include <fstream>
#include <sstream>

#include "quasiline/error.hpp"

namespace quasiline {

namespace {

[[noreturn]] void shape(const std::string& why) { throw Error(ErrorKind::InvalidInput, why); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) shape(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t as_index(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) shape("expected a nonnegative integer");
  return j.get<std::size_t>();
}

Rational as_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  shape("expected an integer or a rational string");
}

std::vector<Move> moves_from(const Json& j) {
  std::vector<Move> moves;
  for (const Json& m : j) {
    if (!m.is_array() || m.size() != 2) shape("a move is [start, length]");
    moves.push_back({as_index(m[0]), as_index(m[1])});
  }
  return moves;
}

}  // namespace

Json to_json(const PermSequence& seq) {
  Json moves = Json::array();
  for (const Move& m : seq.moves()) moves.push_back({m.start, m.length});
  return {{"n", seq.n()}, {"moves", moves}, {"designated", seq.designated()}};
}

PermSequence sequence_from_json(const Json& j) {
  std::vector<std::size_t> designated;
  if (j.contains("designated")) {
    for (const Json& x : j.at("designated")) designated.push_back(as_index(x));
  }
  return PermSequence(as_index(field(j, "n")), moves_from(field(j, "moves")), designated);
}

Json to_json(const Realization& r) {
  Json j = to_json(r.seq);
  Json points = Json::array();
  for (const auto& [idx, label] : r.point_of_move) points.push_back({idx, label});
  j["points"] = points;
  j["lines"] = r.wire_labels;
  return j;
}

Realization realization_from_json(const Json& j) {
  Realization r{sequence_from_json(j), {}, {}};
  if (j.contains("points")) {
    for (const Json& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2 || !p[1].is_string()) shape("a point entry is [move, label]");
      r.point_of_move[as_index(p[0])] = p[1].get<std::string>();
    }
  }
  if (j.contains("lines")) r.wire_labels = j.at("lines").get<std::vector<std::string>>();
  return r;
}

Json to_json(const WiringDiagram& d) {
  Json events = Json::array();
  for (const Event& e : d.events()) {
    events.push_back({e.start, e.length, e.point ? Json(*e.point) : Json(nullptr)});
  }
  Json j{{"n", d.n()}, {"events", events}};
  if (!d.wire_labels().empty()) j["wires"] = d.wire_labels();
  return j;
}

WiringDiagram diagram_from_json(const Json& j) {
  std::vector<Event> events;
  for (const Json& e : field(j, "events")) {
    if (!e.is_array() || e.size() != 3) shape("an event is [start, length, label-or-null]");
    Event ev{as_index(e[0]), as_index(e[1]), std::nullopt};
    if (e[2].is_string()) ev.point = e[2].get<std::string>();
    else if (!e[2].is_null()) shape("event label must be a string or null");
    events.push_back(std::move(ev));
  }
  std::vector<std::string> wires;
  if (j.contains("wires")) wires = j.at("wires").get<std::vector<std::string>>();
  return WiringDiagram(as_index(field(j, "n")), std::move(events), std::move(wires));
}

Json to_json(const StraightDrawing& g) {
  Json vertices = Json::array();
  for (const Point2& p : g.vertices) vertices.push_back({to_string(p.x), to_string(p.y)});
  Json chords = Json::array();
  for (const auto& [a, b] : g.chords) chords.push_back({a, b});
  return {{"vertices", vertices}, {"wires", g.wires}, {"chords", chords}, {"outer", g.outer}, {"method", g.method}};
}

StraightDrawing drawing_from_json(const Json& j) {
  StraightDrawing g;
  for (const Json& p : field(j, "vertices")) {
    if (!p.is_array() || p.size() != 2) shape("a vertex is [x, y]");
    g.vertices.push_back({as_rational(p[0]), as_rational(p[1])});
  }
  g.wires = field(j, "wires").get<std::vector<std::vector<std::size_t>>>();
  for (const Json& c : field(j, "chords")) {
    if (!c.is_array() || c.size() != 2) shape("a chord is [first, last]");
    g.chords.emplace_back(as_index(c[0]), as_index(c[1]));
  }
  g.outer = field(j, "outer").get<std::vector<std::size_t>>();
  g.method = field(j, "method").get<std::string>();
  return g;
}

Json to_json(const EmbeddingScheme& s) {
  Json edges = Json::array();
  for (std::size_t e = 0; e < s.edge_count(); ++e) edges.push_back({s.dart_vertex[2 * e], s.dart_vertex[2 * e + 1]});
  Json opposite = Json::array();
  for (std::size_t o : s.opposite) opposite.push_back(o == npos ? Json(nullptr) : Json(o));
  return {{"vertices", s.vertex_count}, {"labels", s.vertex_labels}, {"edges", edges},
          {"rotation", s.rotation},     {"signature", s.signature},   {"opposite", opposite},
          {"lines", s.edge_line}};
}

EmbeddingScheme scheme_from_json(const Json& j) {
  EmbeddingScheme s;
  s.vertex_count = as_index(field(j, "vertices"));
  for (const Json& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) shape("an edge is [u, v]");
    s.dart_vertex.push_back(as_index(e[0]));
    s.dart_vertex.push_back(as_index(e[1]));
  }
  for (std::size_t v : s.dart_vertex) {
    if (v >= s.vertex_count) shape("edge names a missing vertex");
  }
  s.signature = field(j, "signature").get<std::vector<int>>();
  s.rotation = field(j, "rotation").get<std::vector<std::vector<std::size_t>>>();
  if (j.contains("labels")) s.vertex_labels = j.at("labels").get<std::vector<std::string>>();
  if (j.contains("opposite")) {
    for (const Json& o : j.at("opposite")) s.opposite.push_back(o.is_null() ? npos : as_index(o));
  }
  if (j.contains("lines")) s.edge_line = j.at("lines").get<std::vector<std::size_t>>();
  validate_scheme(s);
  return s;
}

Json to_json(const MapSummary& m) {
  return {{"V", m.V},
          {"E", m.E},
          {"F", m.F},
          {"euler", m.euler},
          {"orientable", m.orientable},
          {"genus", m.genus},
          {"face_vector", m.face_vector},
          {"fingerprint", m.fingerprint}};
}

GeoInput geo_from_json(const Json& j) {
  GeoInput g;
  for (const Json& l : field(j, "lines")) {
    g.lines.push_back({as_rational(field(l, "a")), as_rational(field(l, "b")), as_rational(field(l, "c")),
                       field(l, "label").get<std::string>()});
  }
  if (j.contains("points")) {
    for (const Json& p : j.at("points")) {
      g.points.push_back({field(p, "label").get<std::string>(), {as_rational(field(p, "x")), as_rational(field(p, "y"))}});
    }
  }
  return g;
}

Json to_json(const GeoInput& g) {
  Json lines = Json::array(), points = Json::array();
  for (const GeoLine& l : g.lines) {
    lines.push_back({{"label", l.label}, {"a", to_string(l.a)}, {"b", to_string(l.b)}, {"c", to_string(l.c)}});
  }
  for (const SelectedPoint& p : g.points) {
    points.push_back({{"label", p.label}, {"x", to_string(p.at.x)}, {"y", to_string(p.at.y)}});
  }
  return {{"lines", lines}, {"points", points}};
}

RealizationPlan plan_from_json(const IncidenceStructure& c, const Json& j) {
  RealizationPlan plan = default_plan(c);
  auto point = [&](const Json& x) {
    auto p = c.point_index(x.get<std::string>());
    if (!p) throw Error(ErrorKind::UnknownId, "plan names unknown point " + x.get<std::string>());
    return *p;
  };
  auto line = [&](const std::string& x) {
    auto l = c.line_index(x);
    if (!l) throw Error(ErrorKind::UnknownId, "plan names unknown line " + x);
    return *l;
  };
  if (j.contains("line_numbering")) {
    for (const auto& [name, wire] : j.at("line_numbering").items()) plan.line_numbering[line(name)] = as_index(wire);
  }
  if (j.contains("point_order")) {
    plan.point_order.clear();
    for (const Json& x : j.at("point_order")) plan.point_order.push_back(point(x));
  }
  if (j.contains("line_orders")) {
    for (const auto& [name, ls] : j.at("line_orders").items()) {
      auto& order = plan.point_line_orders[point(Json(name))];
      order.clear();
      for (const Json& x : ls) order.push_back(line(x.get<std::string>()));
    }
  }
  check_plan(c, plan);
  return plan;
}

Json plan_to_json(const IncidenceStructure& c, const RealizationPlan& plan) {
  Json numbering = Json::object(), orders = Json::object();
  for (std::size_t l = 0; l < c.line_count(); ++l) numbering[c.line_label(l)] = plan.line_numbering[l];
  Json point_order = Json::array();
  for (std::size_t p : plan.point_order) point_order.push_back(c.point_label(p));
  for (std::size_t p = 0; p < c.point_count(); ++p) {
    Json ls = Json::array();
    for (std::size_t l : plan.point_line_orders[p]) ls.push_back(c.line_label(l));
    orders[c.point_label(p)] = ls;
  }
  return {{"line_numbering", numbering}, {"point_order", point_order}, {"line_orders", orders}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace quasiline
