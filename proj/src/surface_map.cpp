#include "quasiline/surface_map.hpp"

#include <algorithm>
#include <set>

#include "quasiline/error.hpp"
#include "quasiline/fingerprint.hpp"

namespace quasiline {

EmbeddingScheme scheme_from_diagram(const WiringDiagram& d) {
  std::vector<std::size_t> vertex_of(d.size(), npos);
  EmbeddingScheme s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.event(i).designated()) {
      vertex_of[i] = s.vertex_count++;
      s.vertex_labels.push_back(*d.event(i).point);
    }
  }
  const auto on_wire = events_on_wires(d);
  std::vector<std::vector<std::size_t>> left(d.n()), right(d.n());
  for (std::size_t w = 0; w < d.n(); ++w) {
    std::vector<std::size_t> pts;
    for (std::size_t i : on_wire[w]) {
      if (vertex_of[i] != npos) pts.push_back(vertex_of[i]);
    }
    if (pts.empty()) {
      throw Error(ErrorKind::WireWithoutPoint, "wire " + d.wire_label(w + 1) + " carries no designated point");
    }
    left[w].assign(pts.size(), npos);
    right[w].assign(pts.size(), npos);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const bool closing = k + 1 == pts.size();
      const std::size_t e = s.signature.size();
      s.signature.push_back(closing ? -1 : 1);
      s.dart_vertex.push_back(pts[k]);
      s.dart_vertex.push_back(closing ? pts[0] : pts[k + 1]);
      s.edge_line.push_back(w + 1);
      right[w][k] = 2 * e;
      left[w][closing ? 0 : k + 1] = 2 * e + 1;
    }
  }

  s.rotation.assign(s.vertex_count, {});
  s.opposite.assign(s.dart_count(), npos);
  std::vector<std::size_t> seen_on(d.n(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (vertex_of[i] == npos) continue;
    auto ws = event_wires(d, i);
    auto& rot = s.rotation[vertex_of[i]];
    for (std::size_t w : ws) rot.push_back(right[w - 1][seen_on[w - 1]]);
    for (std::size_t w : ws) rot.push_back(left[w - 1][seen_on[w - 1]]);
    for (std::size_t w : ws) {
      std::size_t r = right[w - 1][seen_on[w - 1]], l = left[w - 1][seen_on[w - 1]];
      s.opposite[r] = l;
      s.opposite[l] = r;
      ++seen_on[w - 1];
    }
  }
  return s;
}

MapSummary trace_and_summarize(const EmbeddingScheme& s) {
  validate_scheme(s);
  MapSummary m;
  m.V = s.vertex_count;
  m.E = s.edge_count();
  for (const Face& f : trace_faces(s)) m.face_vector.push_back(f.length());
  std::sort(m.face_vector.begin(), m.face_vector.end());
  m.F = m.face_vector.size();
  m.euler = static_cast<long long>(m.V) - static_cast<long long>(m.E) + static_cast<long long>(m.F);
  m.orientable = is_orientable(s);
  m.genus = m.orientable ? (2 - m.euler) / 2 : 2 - m.euler;
  m.fingerprint = fingerprint(s);
  return m;
}

std::vector<Walk> straight_ahead_walks(const EmbeddingScheme& s) {
  if (s.opposite.size() != s.dart_count() ||
      std::find(s.opposite.begin(), s.opposite.end(), npos) != s.opposite.end()) {
    throw Error(ErrorKind::InvalidScheme, "straight-ahead walks need an opposite dart everywhere");
  }
  std::vector<char> used(s.edge_count(), 0);
  std::vector<Walk> walks;
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    if (used[e]) continue;
    Walk w;
    std::size_t d = 2 * e;
    do {
      used[EmbeddingScheme::edge_of(d)] = 1;
      w.darts.push_back(d);
      d = s.opposite[EmbeddingScheme::twin(d)];
    } while (d != 2 * e && w.darts.size() <= s.dart_count());
    walks.push_back(std::move(w));
  }
  return walks;
}

std::size_t negative_edges(const EmbeddingScheme& s, const Walk& w) {
  return static_cast<std::size_t>(std::count_if(w.darts.begin(), w.darts.end(), [&](std::size_t d) {
    return s.signature[EmbeddingScheme::edge_of(d)] < 0;
  }));
}

bool is_simple(const EmbeddingScheme& s, const Walk& w) {
  std::set<std::size_t> seen;
  for (std::size_t d : w.darts) {
    if (!seen.insert(s.dart_vertex[d]).second) return false;
  }
  return true;
}

}  // namespace quasiline
