#include "quasiline/straighten.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <string>

#include "quasiline/error.hpp"
#include "quasiline/faces.hpp"

namespace quasiline {

namespace {

constexpr int kHalfTurn = 1;

struct Dir {
  Rational x, y;
};

int half(const Dir& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : kHalfTurn; }

Rational cross(const Dir& a, const Dir& b) { return a.x * b.y - a.y * b.x; }

// strict counterclockwise angle order starting from the positive x axis
bool angle_less(const Dir& a, const Dir& b) {
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

bool same_direction(const Dir& a, const Dir& b) {
  return cross(a, b) == 0 && a.x * b.x + a.y * b.y > 0;
}

Dir minus(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  return orientation(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_meet(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2) {
  int o1 = orientation(p1, p2, q1), o2 = orientation(p1, p2, q2);
  int o3 = orientation(q1, q2, p1), o4 = orientation(q1, q2, p2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(q1, p1, p2) || on_segment(q2, p1, p2) || on_segment(p1, q1, q2) || on_segment(p2, q1, q2);
}

// Planar rotation of the crossing graph: disk rotation minus the infinity darts.
struct PlanarMap {
  EmbeddingScheme disk;
  std::vector<std::size_t> infinity;  // edge per wire
  std::vector<std::vector<std::size_t>> rotation;
};

PlanarMap planar_map(const WiringDiagram& d) {
  PlanarMap m{disk_scheme(d), infinity_edges(d), {}};
  std::vector<char> is_inf(m.disk.edge_count(), 0);
  for (std::size_t e : m.infinity) is_inf[e] = 1;
  m.rotation.resize(m.disk.vertex_count);
  for (std::size_t v = 0; v < m.disk.vertex_count; ++v) {
    for (std::size_t x : m.disk.rotation[v]) {
      if (!is_inf[EmbeddingScheme::edge_of(x)]) m.rotation[v].push_back(x);
    }
  }
  return m;
}

// Faces of the plane map, each a list of leaving darts; faces lie to the right.
std::vector<std::vector<std::size_t>> planar_faces(const PlanarMap& m) {
  std::vector<std::size_t> pos(m.disk.dart_count(), npos);
  for (const auto& rot : m.rotation) {
    for (std::size_t i = 0; i < rot.size(); ++i) pos[rot[i]] = i;
  }
  std::vector<char> done(m.disk.dart_count(), 0);
  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t d0 = 0; d0 < m.disk.dart_count(); ++d0) {
    if (pos[d0] == npos || done[d0]) continue;
    std::vector<std::size_t> face;
    std::size_t x = d0;
    do {
      done[x] = 1;
      face.push_back(x);
      std::size_t t = EmbeddingScheme::twin(x);
      const auto& rot = m.rotation[m.disk.dart_vertex[t]];
      x = rot[(pos[t] + 1) % rot.size()];
    } while (x != d0);
    faces.push_back(std::move(face));
  }
  return faces;
}

std::vector<Point2> solve_barycentric(std::size_t count, const std::vector<std::vector<std::size_t>>& adj,
                                      const std::vector<std::size_t>& outer, const std::vector<Point2>& outer_at) {
  std::vector<Point2> at(count);
  std::vector<std::size_t> slot(count, npos);
  std::vector<char> fixed(count, 0);
  for (std::size_t i = 0; i < outer.size(); ++i) {
    fixed[outer[i]] = 1;
    at[outer[i]] = outer_at[i];
  }
  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < count; ++v) {
    if (!fixed[v]) {
      slot[v] = free.size();
      free.push_back(v);
    }
  }
  const std::size_t m = free.size();
  if (m == 0) return at;
  // rows: [A | bx | by]
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 2));
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t v = free[r];
    a[r][r] = static_cast<long>(adj[v].size());
    for (std::size_t u : adj[v]) {
      if (fixed[u]) {
        a[r][m] += at[u].x;
        a[r][m + 1] += at[u].y;
      } else {
        a[r][slot[u]] -= 1;
      }
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) throw Error(ErrorKind::InvalidDiagram, "barycentric system is singular");
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (std::size_t k = c; k < m + 2; ++k) a[c][k] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k < m + 2; ++k) a[r][k] -= f * a[c][k];
    }
  }
  for (std::size_t r = 0; r < m; ++r) at[free[r]] = {a[r][m], a[r][m + 1]};
  return at;
}

// Points on the unit circle with rational coordinates, counterclockwise.
std::vector<Point2> circle_points(std::size_t k) {
  std::vector<Point2> pts;
  Rational last_t;
  for (std::size_t i = 0; i < k; ++i) {
    double theta = -std::numbers::pi + 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / static_cast<double>(k);
    Rational t(static_cast<long>(std::llround(std::tan(theta / 2) * 4096.0)), 4096);
    t.canonicalize();
    if (i > 0 && t <= last_t) throw Error(ErrorKind::InvalidDiagram, "outer polygon too large for the circle grid");
    last_t = t;
    Rational den = 1 + t * t;
    pts.push_back({(1 - t * t) / den, 2 * t / den});
  }
  return pts;
}

std::vector<std::size_t> canonical_cycle(std::vector<std::size_t> cyc) {
  std::vector<std::size_t> best;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < cyc.size(); ++r) {
      std::vector<std::size_t> c(cyc.begin() + static_cast<std::ptrdiff_t>(r), cyc.end());
      c.insert(c.end(), cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(r));
      if (best.empty() || c < best) best = c;
    }
    std::reverse(cyc.begin(), cyc.end());
  }
  return best;
}

}  // namespace

std::vector<std::vector<std::size_t>> crossing_graph(const WiringDiagram& d) {
  std::vector<std::vector<std::size_t>> adj(d.size());
  for (const auto& evs : events_on_wires(d)) {
    for (std::size_t k = 1; k < evs.size(); ++k) {
      adj[evs[k - 1]].push_back(evs[k]);
      adj[evs[k]].push_back(evs[k - 1]);
    }
  }
  return adj;
}

bool is_two_connected(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  if (n < 3) return false;
  std::vector<std::size_t> disc(n, npos), low(n, 0);
  std::size_t timer = 0;
  bool cut = false;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t parent) {
    disc[v] = low[v] = timer++;
    std::size_t children = 0;
    for (std::size_t u : adj[v]) {
      if (u == parent) continue;
      if (disc[u] != npos) {
        low[v] = std::min(low[v], disc[u]);
        continue;
      }
      ++children;
      dfs(u, v);
      low[v] = std::min(low[v], low[u]);
      if (parent != npos && low[u] >= disc[v]) cut = true;
    }
    if (parent == npos && children > 1) cut = true;
  };
  dfs(0, npos);
  if (timer != n) return false;
  return !cut;
}

StraightDrawing straighten(const WiringDiagram& d) {
  if (auto digons = detect_digons(d); !digons.empty()) {
    throw Error(ErrorKind::HasDigons, std::to_string(digons.size()) + " digon face(s) found; no bend-free drawing");
  }
  auto adj = crossing_graph(d);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    std::set<std::size_t> distinct(adj[v].begin(), adj[v].end());
    if (distinct.size() != adj[v].size()) throw Error(ErrorKind::HasDigons, "crossing graph has a double edge");
  }
  if (!is_two_connected(adj)) throw Error(ErrorKind::NotTwoConnected, "crossing graph is not 2-connected");

  StraightDrawing out;
  out.wires = events_on_wires(d);
  for (const auto& evs : out.wires) {
    if (evs.front() == evs.back()) throw Error(ErrorKind::InvalidDiagram, "a wire with a single crossing has no chord");
    out.chords.emplace_back(evs.front(), evs.back());
  }

  const PlanarMap pm = planar_map(d);
  // the corner left empty by wire 1's dart into infinity at its first event
  const std::size_t first = out.wires[0].front();
  const auto& full = pm.disk.rotation[first];
  const std::size_t inf_dart = 2 * pm.infinity[0] + 1;
  const std::size_t at = static_cast<std::size_t>(std::find(full.begin(), full.end(), inf_dart) - full.begin());
  std::size_t start = npos;
  for (std::size_t k = 1; k < full.size() && start == npos; ++k) {
    std::size_t x = full[(at + k) % full.size()];
    if (std::find(pm.rotation[first].begin(), pm.rotation[first].end(), x) != pm.rotation[first].end()) start = x;
  }
  auto faces = planar_faces(pm);
  std::size_t outer_face = npos;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (std::find(faces[f].begin(), faces[f].end(), start) != faces[f].end()) outer_face = f;
  }
  for (std::size_t x : faces[outer_face]) out.outer.push_back(pm.disk.dart_vertex[x]);

  const auto ring = circle_points(out.outer.size());
  out.vertices = solve_barycentric(d.size(), adj, out.outer, ring);
  out.method = "barycentric";
  if (audit_drawing(d, out).ok()) return out;

  // Star every inner face; barycentric maps of triangulated disks are embeddings.
  auto aug = adj;
  std::size_t count = d.size();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (f == outer_face) continue;
    aug.emplace_back();
    for (std::size_t x : faces[f]) {
      std::size_t v = pm.disk.dart_vertex[x];
      aug[count].push_back(v);
      aug[v].push_back(count);
    }
    ++count;
  }
  auto pts = solve_barycentric(count, aug, out.outer, ring);
  pts.resize(d.size());
  out.vertices = std::move(pts);
  out.method = "triangulated-barycentric";
  DrawingAudit audit = audit_drawing(d, out);
  if (!audit.ok()) throw Error(ErrorKind::InvalidDiagram, "straight-line drawing failed its audit: " + audit.detail);
  return out;
}

DrawingAudit audit_drawing(const WiringDiagram& d, const StraightDrawing& g) {
  DrawingAudit audit;
  const auto& P = g.vertices;
  if (P.size() != d.size() || g.wires.size() != d.n()) {
    audit.detail = "drawing does not match the diagram's size";
    return audit;
  }

  // 1. segments meet only at shared ends
  struct Seg {
    std::size_t a, b;
  };
  std::vector<Seg> segs;
  for (const auto& w : g.wires) {
    for (std::size_t k = 1; k < w.size(); ++k) segs.push_back({w[k - 1], w[k]});
  }
  audit.segments_disjoint = true;
  for (std::size_t i = 0; i < P.size() && audit.segments_disjoint; ++i) {
    for (std::size_t j = i + 1; j < P.size(); ++j) {
      if (P[i] == P[j]) {
        audit.segments_disjoint = false;
        audit.detail = "events " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
        break;
      }
    }
  }
  for (std::size_t i = 0; i < segs.size() && audit.segments_disjoint; ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Seg& s = segs[i];
      const Seg& t = segs[j];
      std::set<std::size_t> ends{s.a, s.b, t.a, t.b};
      bool bad = false;
      if (ends.size() == 4) {
        bad = segments_meet(P[s.a], P[s.b], P[t.a], P[t.b]);
      } else if (ends.size() == 3) {
        std::size_t c = (s.a == t.a || s.a == t.b) ? s.a : s.b;
        std::size_t x = s.a == c ? s.b : s.a;
        std::size_t y = t.a == c ? t.b : t.a;
        bad = same_direction(minus(P[x], P[c]), minus(P[y], P[c]));
      } else {
        bad = true;
      }
      if (bad) {
        audit.segments_disjoint = false;
        audit.detail = "segments " + std::to_string(i) + " and " + std::to_string(j) + " meet";
        break;
      }
    }
  }

  // 2. rotations, reading the chord rays as darts into infinity
  const EmbeddingScheme disk = disk_scheme(d);
  const auto inf = infinity_edges(d);
  std::vector<char> is_inf(disk.edge_count(), 0);
  for (std::size_t e : inf) is_inf[e] = 1;
  auto dart_dir = [&](const EmbeddingScheme& s, const std::vector<char>& infinite, std::size_t x) {
    const std::size_t v = s.dart_vertex[x];
    const std::size_t u = s.dart_vertex[EmbeddingScheme::twin(x)];
    // a ray leaves v pointing away from the far end of its chord
    return infinite[EmbeddingScheme::edge_of(x)] ? minus(P[v], P[u]) : minus(P[u], P[v]);
  };
  auto angular_rotation = [&](const EmbeddingScheme& s, const std::vector<char>& infinite, std::size_t v, bool& ok) {
    std::vector<std::size_t> darts = s.rotation[v];
    std::sort(darts.begin(), darts.end(), [&](std::size_t a, std::size_t b) {
      return angle_less(dart_dir(s, infinite, a), dart_dir(s, infinite, b));
    });
    for (std::size_t k = 0; k < darts.size(); ++k) {
      if (same_direction(dart_dir(s, infinite, darts[k]), dart_dir(s, infinite, darts[(k + 1) % darts.size()])) &&
          darts.size() > 1) {
        ok = false;
      }
    }
    return darts;
  };
  audit.rotations_match = true;
  for (std::size_t v = 0; v < disk.vertex_count && audit.rotations_match; ++v) {
    bool ok = true;
    auto got = angular_rotation(disk, is_inf, v, ok);
    auto want = disk.rotation[v];
    auto it = std::find(got.begin(), got.end(), want[0]);
    std::rotate(got.begin(), it, got.end());
    if (!ok || got != want) {
      audit.rotations_match = false;
      audit.detail = "angular order at event " + std::to_string(v) + " differs from the diagram";
    }
  }

  // 3. chords pairwise cross inside the polygon
  audit.chords_cross_inside = true;
  for (std::size_t i = 0; i < g.chords.size() && audit.chords_cross_inside; ++i) {
    for (std::size_t j = i + 1; j < g.chords.size(); ++j) {
      auto [a, b] = g.chords[i];
      auto [c, e] = g.chords[j];
      if (!segments_meet(P[a], P[b], P[c], P[e])) {
        audit.chords_cross_inside = false;
        audit.detail = "chords of wires " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " miss";
        break;
      }
    }
  }

  // 4. faces of the scheme rebuilt from coordinates
  EmbeddingScheme geo;
  geo.vertex_count = P.size();
  std::vector<char> geo_inf;
  for (const auto& w : g.wires) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      const bool chord = k + 1 == w.size();
      geo.dart_vertex.push_back(w[k]);
      geo.dart_vertex.push_back(chord ? w[0] : w[k + 1]);
      geo.signature.push_back(chord ? -1 : 1);
      geo_inf.push_back(chord ? 1 : 0);
    }
  }
  geo.rotation.assign(P.size(), {});
  for (std::size_t x = 0; x < geo.dart_count(); ++x) geo.rotation[geo.dart_vertex[x]].push_back(x);
  bool geo_ok = true;
  for (std::size_t v = 0; v < P.size(); ++v) geo.rotation[v] = angular_rotation(geo, geo_inf, v, geo_ok);
  auto cycles = [](const EmbeddingScheme& s) {
    std::vector<std::vector<std::size_t>> out;
    for (const Face& f : trace_faces(s)) {
      std::vector<std::size_t> vs;
      for (std::size_t x : f.darts) vs.push_back(s.dart_vertex[x]);
      out.push_back(canonical_cycle(vs));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  audit.faces_match = geo_ok && cycles(geo) == cycles(disk);
  if (!audit.faces_match && audit.detail.empty()) audit.detail = "faces traced from coordinates differ";
  return audit;
}

}  // namespace quasiline
