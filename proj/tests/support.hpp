// Test-side oracles and fixtures. Nothing here calls the code it is used to
// check, except to build inputs.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "quasiline/arrangement.hpp"
#include "quasiline/embedding_scheme.hpp"
#include "quasiline/error.hpp"
#include "quasiline/incidence.hpp"
#include "quasiline/lines.hpp"
#include "quasiline/wiring.hpp"

namespace oracle {

namespace ql = quasiline;
using Rng = std::mt19937_64;

inline std::optional<ql::ErrorKind> error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const ql::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- catalog

inline ql::IncidenceStructure from_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::string> points, lines;
  std::vector<std::pair<std::string, std::string>> flags;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    lines.push_back("L" + std::to_string(i + 1));
    for (const auto& p : rows[i]) {
      if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
      flags.emplace_back(p, lines.back());
    }
  }
  return ql::IncidenceStructure::build(points, lines, flags);
}

inline std::vector<std::vector<std::string>> cyclic_rows(int n, std::vector<int> shape) {
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> row;
    for (int s : shape) row.push_back(std::to_string((i + s) % n));
    rows.push_back(row);
  }
  return rows;
}

inline ql::IncidenceStructure fano() {
  return from_rows({{"1", "2", "3"}, {"1", "4", "5"}, {"1", "6", "7"}, {"2", "4", "6"},
                    {"2", "5", "7"}, {"3", "4", "7"}, {"3", "5", "6"}});
}

inline ql::IncidenceStructure mobius_kantor() { return from_rows(cyclic_rows(8, {0, 1, 3})); }

// The (10_3) class with no straight-line realization (automorphism group of
// order 24).
inline std::vector<std::vector<std::string>> anti_desargues_rows() {
  return {{"4", "5", "6"}, {"0", "3", "6"}, {"1", "3", "4"}, {"5", "7", "9"}, {"6", "8", "9"},
          {"1", "2", "7"}, {"2", "3", "5"}, {"4", "7", "8"}, {"0", "1", "8"}, {"0", "2", "9"}};
}
inline ql::IncidenceStructure anti_desargues() { return from_rows(anti_desargues_rows()); }

inline ql::IncidenceStructure triangle() { return from_rows({{"a", "b"}, {"b", "c"}, {"c", "a"}}); }

// two lines through the same three points
inline ql::IncidenceStructure two_lines_three_points() { return from_rows({{"p", "q", "r"}, {"p", "q", "r"}}); }

inline ql::Rational R(long p, long q = 1) {
  ql::Rational r(p, q);
  r.canonicalize();
  return r;
}

inline ql::GeoLine line_through(const ql::Point2& p, const ql::Point2& q, std::string label) {
  // (q.y - p.y) x - (q.x - p.x) y = (q.y - p.y) p.x - (q.x - p.x) p.y
  ql::Rational a = q.y - p.y, b = p.x - q.x;
  return {a, b, ql::Rational(a * p.x + b * p.y), std::move(label)};
}

inline ql::Point2 meet(const ql::GeoLine& l, const ql::GeoLine& m) {
  ql::Rational den = l.a * m.b - l.b * m.a;
  return {(l.c * m.b - l.b * m.c) / den, (l.a * m.c - l.c * m.a) / den};
}

struct GeoFixture {
  std::vector<ql::GeoLine> lines;
  std::vector<ql::SelectedPoint> points;
};

// Pappus: A1, A2, A3 on one line, B1, B2, B3 on another; X, Y, Z the cross joins.
inline GeoFixture pappus() {
  ql::Point2 A1{R(0), R(0)}, A2{R(2), R(1)}, A3{R(5), R(5, 2)};
  ql::Point2 B1{R(1), R(3)}, B2{R(2), R(5)}, B3{R(4), R(9)};
  auto c = line_through(A1, B2, "c"), d = line_through(A2, B1, "d");
  auto e = line_through(A1, B3, "e"), f = line_through(A3, B1, "f");
  auto g = line_through(A2, B3, "g"), h = line_through(A3, B2, "h");
  ql::Point2 X = meet(c, d), Y = meet(e, f), Z = meet(g, h);
  GeoFixture fx;
  fx.lines = {line_through(A1, A2, "a"), line_through(B1, B2, "b"), c, d, e, f, g, h, line_through(X, Y, "p")};
  fx.points = {{"A1", A1}, {"A2", A2}, {"A3", A3}, {"B1", B1}, {"B2", B2},
               {"B3", B3}, {"X", X},   {"Y", Y},   {"Z", Z}};
  return fx;
}

// ---------------------------------------------------------------- random inputs

inline ql::IncidenceStructure random_incidence(Rng& rng, std::size_t max_points = 8, std::size_t max_lines = 8) {
  std::uniform_int_distribution<std::size_t> np(2, max_points), nl(2, max_lines);
  const std::size_t P = np(rng), L = nl(rng);
  std::set<std::pair<std::size_t, std::size_t>> flags;
  std::bernoulli_distribution coin(0.45);
  for (std::size_t p = 0; p < P; ++p) {
    for (std::size_t l = 0; l < L; ++l) {
      if (coin(rng)) flags.insert({p, l});
    }
  }
  auto degree_fix = [&](bool points_side) {
    const std::size_t count = points_side ? P : L, other = points_side ? L : P;
    for (std::size_t x = 0; x < count; ++x) {
      auto deg = [&] {
        return std::count_if(flags.begin(), flags.end(),
                             [&](auto& f) { return (points_side ? f.first : f.second) == x; });
      };
      std::uniform_int_distribution<std::size_t> pick(0, other - 1);
      while (deg() < 2) {
        std::size_t y = pick(rng);
        flags.insert(points_side ? std::make_pair(x, y) : std::make_pair(y, x));
      }
    }
  };
  degree_fix(true);
  degree_fix(false);
  std::vector<std::string> points, lines;
  for (std::size_t p = 0; p < P; ++p) points.push_back("p" + std::to_string(p));
  for (std::size_t l = 0; l < L; ++l) lines.push_back("L" + std::to_string(l));
  std::vector<ql::Flag> fl;
  for (auto [p, l] : flags) fl.push_back({p, l});
  return ql::IncidenceStructure::from_indices(points, lines, fl);
}

// Random window reversals followed by adjacent swaps down to the reverse order.
inline ql::PermSequence random_generalized_sequence(Rng& rng, std::size_t max_n = 8) {
  std::uniform_int_distribution<std::size_t> nd(2, max_n);
  const std::size_t n = nd(rng);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<ql::Move> moves;
  std::uniform_int_distribution<std::size_t> count(0, 2 * n);
  for (std::size_t k = count(rng); k > 0; --k) {
    std::uniform_int_distribution<std::size_t> start(1, n - 1);
    std::size_t s = start(rng);
    std::uniform_int_distribution<std::size_t> len(2, n - s + 1);
    std::size_t l = len(rng);
    moves.push_back({s, l});
    std::reverse(perm.begin() + static_cast<long>(s - 1), perm.begin() + static_cast<long>(s - 1 + l));
  }
  // bubble toward n, n-1, ..., 1
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (perm[i] < perm[i + 1]) {
        std::swap(perm[i], perm[i + 1]);
        moves.push_back({i + 1, 2});
        swapped = true;
      }
    }
  }
  std::vector<std::size_t> designated;
  std::bernoulli_distribution coin(0.3);
  for (std::size_t i = 1; i <= moves.size(); ++i) {
    if (coin(rng)) designated.push_back(i);
  }
  return ql::PermSequence(n, moves, designated);
}

// Any windows at all.
inline ql::PermSequence random_sequence(Rng& rng, std::size_t max_n = 7) {
  std::uniform_int_distribution<std::size_t> nd(2, max_n);
  const std::size_t n = nd(rng);
  std::uniform_int_distribution<std::size_t> count(0, 3 * n);
  std::vector<ql::Move> moves;
  for (std::size_t k = count(rng); k > 0; --k) {
    std::uniform_int_distribution<std::size_t> start(1, n - 1);
    std::size_t s = start(rng);
    std::uniform_int_distribution<std::size_t> len(2, std::min<std::size_t>(n - s + 1, 3));
    moves.push_back({s, len(rng)});
  }
  return ql::PermSequence(n, moves);
}

// Random simple arrangement of integer lines, optionally with a few
// concurrent triples whose meeting points are selected.
inline GeoFixture random_lines(Rng& rng, std::size_t count, std::size_t pencils) {
  std::uniform_int_distribution<long> coord(-12, 12);
  GeoFixture fx;
  for (std::size_t k = 0; k < pencils; ++k) {
    ql::Point2 c{R(coord(rng)), R(coord(rng))};
    fx.points.push_back({"P" + std::to_string(k), c});
    for (int j = 0; j < 3; ++j) {
      ql::Point2 q{R(coord(rng)), R(coord(rng))};
      if (q == c) q.x += 1;
      fx.lines.push_back(line_through(c, q, "l" + std::to_string(fx.lines.size())));
    }
  }
  while (fx.lines.size() < count) {
    ql::Point2 p{R(coord(rng)), R(coord(rng))}, q{R(coord(rng)), R(coord(rng))};
    if (p == q) continue;
    fx.lines.push_back(line_through(p, q, "l" + std::to_string(fx.lines.size())));
  }
  // coincident lines would be rejected; start over
  for (std::size_t i = 0; i < fx.lines.size(); ++i) {
    for (std::size_t j = i + 1; j < fx.lines.size(); ++j) {
      const auto &l = fx.lines[i], &m = fx.lines[j];
      if (l.a * m.b == l.b * m.a && l.a * m.c == l.c * m.a && l.b * m.c == l.c * m.b) return random_lines(rng, count, pencils);
    }
  }
  return fx;
}

// ---------------------------------------------------------------- incidence oracles

// Girth by deleting each edge and measuring the detour.
inline std::optional<std::size_t> girth_by_edge_removal(const ql::LeviGraph& g) {
  std::optional<std::size_t> best;
  for (auto [b, w] : g.edges) {
    std::vector<std::size_t> dist(g.vertex_count(), SIZE_MAX);
    std::deque<std::size_t> q{b};
    dist[b] = 0;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop_front();
      for (std::size_t u : g.adjacency[v]) {
        if ((v == b && u == w) || (v == w && u == b)) continue;
        if (dist[u] == SIZE_MAX) {
          dist[u] = dist[v] + 1;
          q.push_back(u);
        }
      }
    }
    if (dist[w] != SIZE_MAX && (!best || dist[w] + 1 < *best)) best = dist[w] + 1;
  }
  return best;
}

// ---------------------------------------------------------------- diagram oracles

// Wire sets of every event, by replaying positions.
inline std::vector<std::set<std::size_t>> event_wire_sets(const ql::WiringDiagram& d) {
  std::vector<std::size_t> at(d.n());
  std::iota(at.begin(), at.end(), 1);
  std::vector<std::set<std::size_t>> out;
  for (const auto& e : d.events()) {
    out.emplace_back(at.begin() + static_cast<long>(e.start - 1), at.begin() + static_cast<long>(e.start - 1 + e.length));
    std::reverse(at.begin() + static_cast<long>(e.start - 1), at.begin() + static_cast<long>(e.start - 1 + e.length));
  }
  return out;
}

// Sweeps the cut through the vertices in the given order: each vertex's lines
// must be adjacent on the current cut, and the sweep must end reversed.
// Returns the number of violations.
inline std::size_t cut_violations(const ql::WiringDiagram& d, const std::vector<std::size_t>& order) {
  auto sets = event_wire_sets(d);
  std::size_t bad = 0;
  if (order.size() != d.size()) return 1;
  std::vector<char> used(d.size(), 0);
  std::vector<std::size_t> cut(d.n());
  std::iota(cut.begin(), cut.end(), 1);
  for (std::size_t v : order) {
    if (v >= d.size() || used[v]) return bad + 1;
    used[v] = 1;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < cut.size(); ++k) {
      if (sets[v].count(cut[k])) idx.push_back(k);
    }
    if (idx.size() != sets[v].size() || idx.back() - idx.front() + 1 != idx.size()) {
      ++bad;
      continue;
    }
    std::reverse(cut.begin() + static_cast<long>(idx.front()), cut.begin() + static_cast<long>(idx.back() + 1));
  }
  std::vector<std::size_t> rev(d.n());
  std::iota(rev.rbegin(), rev.rend(), 1);
  if (cut != rev) ++bad;
  return bad;
}

// Proper-marking test written from the definition.
inline bool proper_marking(const ql::AbstractArrangement& a, std::size_t g) {
  const std::size_t n2 = 2 * a.n;
  std::vector<std::vector<std::size_t>> oriented(a.n);
  for (std::size_t l = 1; l <= a.n; ++l) {
    std::size_t t = static_cast<std::size_t>(std::find(a.boundary.begin(), a.boundary.end(), l) - a.boundary.begin());
    bool from_low = (t + n2 - g) % n2 < (t + a.n + n2 - g) % n2;
    oriented[l - 1] = a.line_vertices[l - 1];
    if (!from_low) std::reverse(oriented[l - 1].begin(), oriented[l - 1].end());
  }
  for (std::size_t x = 0; x < a.n; ++x) {
    for (std::size_t y = x + 1; y < a.n; ++y) {
      std::set<std::size_t> sx(oriented[x].begin(), oriented[x].end());
      std::vector<std::size_t> on_x, on_y;
      for (std::size_t v : oriented[y]) {
        if (sx.count(v)) on_y.push_back(v);
      }
      std::set<std::size_t> sy(oriented[y].begin(), oriented[y].end());
      for (std::size_t v : oriented[x]) {
        if (sy.count(v)) on_x.push_back(v);
      }
      if (on_x != on_y) return false;
    }
  }
  return true;
}

// Re-chooses wire `inf` (0-based) of an adjacent-transposition sequence on n
// wires as the line at infinity; lines are renumbered 1.. in wire order.
inline std::optional<ql::AbstractArrangement> rechoose_infinity(const std::vector<std::size_t>& swaps, std::size_t n,
                                                                std::size_t inf) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  struct Ev {
    std::size_t upper, lower;
  };
  std::vector<Ev> events;
  for (std::size_t p : swaps) {
    events.push_back({perm[p], perm[p + 1]});
    std::swap(perm[p], perm[p + 1]);
  }
  std::vector<std::size_t> line_of(n, 0);
  for (std::size_t w = 0, next = 1; w < n; ++w) {
    if (w != inf) line_of[w] = next++;
  }
  std::map<std::size_t, std::size_t> ctime;
  std::vector<std::size_t> tokens;
  for (std::size_t t = 0; t < events.size(); ++t) {
    const Ev& e = events[t];
    if (e.upper != inf && e.lower != inf) continue;
    std::size_t other = e.upper == inf ? e.lower : e.upper;
    if (ctime.count(other)) return std::nullopt;
    ctime[other] = t;
    tokens.push_back(line_of[other]);
  }
  if (ctime.size() != n - 1) return std::nullopt;
  ql::AbstractArrangement a;
  a.n = n - 1;
  a.boundary = tokens;
  a.boundary.insert(a.boundary.end(), tokens.begin(), tokens.end());
  a.line_vertices.resize(a.n);
  a.vertex_lines.resize(events.size());
  a.vertex_labels.resize(events.size());
  for (std::size_t w = 0; w < n; ++w) {
    if (w == inf) continue;
    std::vector<std::size_t> before, after;
    const std::size_t c = ctime[w];
    for (std::size_t t = 0; t < events.size(); ++t) {
      const Ev& e = events[t];
      if ((e.upper != w && e.lower != w) || e.upper == inf || e.lower == inf) continue;
      (t < c ? before : after).push_back(t);
    }
    std::vector<std::size_t> list;
    if (events[c].upper == w) {
      list.assign(before.rbegin(), before.rend());
      list.insert(list.end(), after.rbegin(), after.rend());
    } else {
      list = after;
      list.insert(list.end(), before.begin(), before.end());
    }
    a.line_vertices[line_of[w] - 1] = list;
    for (std::size_t v : list) a.vertex_lines[v].push_back(line_of[w]);
  }
  for (auto& ls : a.vertex_lines) std::sort(ls.begin(), ls.end());
  return a;
}

struct Witness {
  std::vector<std::size_t> swaps;  // 0-based positions
  std::size_t n = 0;
  std::size_t inf = 0;             // 0-based wire
  ql::AbstractArrangement arrangement;
};

// Shortest non-monotone arrangement obtained from a 4-wire simple wiring
// diagram by sending one wire to infinity.
inline std::optional<Witness> find_non_monotone_witness(std::size_t n = 4, std::size_t max_len = 12) {
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> swaps(len, 0);
    while (true) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t p : swaps) std::swap(perm[p], perm[p + 1]);
      bool reversed = true;
      for (std::size_t i = 0; i < n; ++i) reversed = reversed && perm[i] == n - 1 - i;
      if (reversed) {
        for (std::size_t inf = 0; inf < n; ++inf) {
          auto a = rechoose_infinity(swaps, n, inf);
          if (!a) continue;
          bool any = false;
          for (std::size_t g = 0; g < 2 * a->n && !any; ++g) any = proper_marking(*a, g);
          if (!any) return Witness{swaps, n, inf, *a};
        }
      }
      std::size_t k = 0;
      while (k < len && ++swaps[k] == n - 1) swaps[k++] = 0;
      if (k == len) break;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- map oracles

// Faces as orbits of flags (dart, side) under the corner and edge involutions.
inline std::vector<std::size_t> face_lengths_by_flags(const ql::EmbeddingScheme& s) {
  const std::size_t D = s.dart_count();
  std::vector<std::size_t> parent(2 * D);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto join = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  auto flag = [](std::size_t d, int side) { return 2 * d + (side > 0 ? 0 : 1); };
  for (const auto& rot : s.rotation) {
    for (std::size_t i = 0; i < rot.size(); ++i) join(flag(rot[i], +1), flag(rot[(i + 1) % rot.size()], -1));
  }
  for (std::size_t d = 0; d < D; d += 2) {
    int lam = s.signature[d / 2];
    for (int side : {1, -1}) join(flag(d, side), flag(d + 1, -side * lam));
  }
  std::map<std::size_t, std::size_t> size;
  for (std::size_t f = 0; f < 2 * D; ++f) ++size[find(f)];
  std::vector<std::size_t> out;
  for (auto [root, k] : size) out.push_back(k / 2);
  std::sort(out.begin(), out.end());
  return out;
}

// Isomorphism up to relabeling, local reversal and switching. Searches for an
// explicit dart bijection: the image of one vertex fixes its neighbours up to
// direction, so vertices are placed along a spanning tree and every edge is
// verified (twins map to twins, sign becomes dir_u * dir_v * sign).
inline bool maps_isomorphic(const ql::EmbeddingScheme& A, const ql::EmbeddingScheme& B) {
  if (A.vertex_count != B.vertex_count || A.edge_count() != B.edge_count()) return false;
  const std::size_t V = A.vertex_count;
  if (V == 0) return true;
  auto posA = ql::rotation_positions(A), posB = ql::rotation_positions(B);
  // spanning tree order
  std::vector<std::size_t> order{0}, parent_dart(V, SIZE_MAX);
  std::vector<char> seen(V, 0);
  seen[0] = 1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t d : A.rotation[order[k]]) {
      std::size_t u = A.dart_vertex[d ^ 1U];
      if (!seen[u]) {
        seen[u] = 1;
        parent_dart[u] = d;
        order.push_back(u);
      }
    }
  }
  if (order.size() != V) return false;
  std::vector<std::size_t> phi(V, SIZE_MAX), shift(V, 0);
  std::vector<int> dir(V, 0);
  std::vector<char> used(V, 0);
  auto image = [&](std::size_t d) {
    std::size_t v = A.dart_vertex[d], k = A.rotation[v].size(), i = posA[d];
    std::size_t j = dir[v] > 0 ? (shift[v] + i) % k : (shift[v] + k - i) % k;
    return B.rotation[phi[v]][j];
  };
  auto consistent = [&](std::size_t v) {
    for (std::size_t d : A.rotation[v]) {
      std::size_t u = A.dart_vertex[d ^ 1U];
      if (phi[u] == SIZE_MAX) continue;
      std::size_t di = image(d);
      if ((di ^ 1U) != image(d ^ 1U)) return false;
      if (B.signature[di / 2] != dir[u] * dir[v] * A.signature[d / 2]) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k == V) return true;
    const std::size_t v = order[k], deg = A.rotation[v].size();
    std::vector<std::tuple<std::size_t, std::size_t, int>> options;  // (b, shift, dir)
    if (k == 0) {
      for (std::size_t b = 0; b < V; ++b) {
        if (B.rotation[b].size() != deg) continue;
        for (std::size_t sh = 0; sh < std::max<std::size_t>(deg, 1); ++sh) {
          options.emplace_back(b, sh, 1);
          options.emplace_back(b, sh, -1);
        }
      }
    } else {
      std::size_t t = parent_dart[v] ^ 1U;
      std::size_t ti = image(parent_dart[v]) ^ 1U;
      std::size_t b = B.dart_vertex[ti];
      if (used[b] || B.rotation[b].size() != deg) return false;
      std::size_t i = posA[t], j = posB[ti];
      options.emplace_back(b, (j + deg - i) % deg, 1);
      options.emplace_back(b, (j + i) % deg, -1);
    }
    for (auto [b, sh, e] : options) {
      phi[v] = b;
      shift[v] = sh;
      dir[v] = e;
      used[b] = 1;
      if (consistent(v) && place(k + 1)) return true;
      used[b] = 0;
      phi[v] = SIZE_MAX;
    }
    return false;
  };
  return place(0);
}

inline bool connected(const ql::EmbeddingScheme& s) {
  if (s.vertex_count == 0) return true;
  std::vector<std::size_t> comp(s.vertex_count);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (std::size_t d = 0; d < s.dart_count(); d += 2) comp[find(s.dart_vertex[d])] = find(s.dart_vertex[d + 1]);
  std::size_t roots = 0;
  for (std::size_t v = 0; v < s.vertex_count; ++v) roots += find(v) == v;
  return roots == 1;
}

// Every connected scheme with at most max_edges edges and vertex degree at
// most max_degree: degree sequences x dart matchings x signatures.
inline std::vector<ql::EmbeddingScheme> all_small_schemes(std::size_t max_edges, std::size_t max_degree) {
  std::vector<ql::EmbeddingScheme> out;
  for (std::size_t E = 1; E <= max_edges; ++E) {
    const std::size_t D = 2 * E;
    std::vector<std::size_t> degs;
    std::function<void(std::size_t)> degree_seqs = [&](std::size_t left) {
      if (left == 0) {
        // slots: vertex v owns a contiguous run of slots in ccw order
        std::vector<std::size_t> slot_vertex;
        for (std::size_t v = 0; v < degs.size(); ++v) slot_vertex.insert(slot_vertex.end(), degs[v], v);
        std::vector<std::size_t> mate(D, SIZE_MAX);
        std::function<void()> matchings = [&]() {
          std::size_t a = 0;
          while (a < D && mate[a] != SIZE_MAX) ++a;
          if (a == D) {
            // edge e joins slots (a_e, b_e); dart 2e at a_e
            std::vector<std::size_t> dart_of(D);
            ql::EmbeddingScheme base;
            base.vertex_count = degs.size();
            std::size_t e = 0;
            for (std::size_t s = 0; s < D; ++s) {
              if (mate[s] > s) {
                dart_of[s] = 2 * e;
                dart_of[mate[s]] = 2 * e + 1;
                base.dart_vertex.push_back(slot_vertex[s]);
                base.dart_vertex.push_back(slot_vertex[mate[s]]);
                ++e;
              }
            }
            base.rotation.assign(degs.size(), {});
            for (std::size_t s = 0; s < D; ++s) base.rotation[slot_vertex[s]].push_back(dart_of[s]);
            if (!connected(base)) return;
            for (std::size_t mask = 0; mask < (1U << E); ++mask) {
              ql::EmbeddingScheme s = base;
              for (std::size_t k = 0; k < E; ++k) s.signature.push_back((mask >> k) & 1U ? -1 : 1);
              out.push_back(std::move(s));
            }
            return;
          }
          for (std::size_t b = a + 1; b < D; ++b) {
            if (mate[b] != SIZE_MAX) continue;
            mate[a] = b;
            mate[b] = a;
            matchings();
            mate[a] = mate[b] = SIZE_MAX;
          }
        };
        matchings();
        return;
      }
      for (std::size_t k = 1; k <= std::min(max_degree, left); ++k) {
        degs.push_back(k);
        degree_seqs(left - k);
        degs.pop_back();
      }
    };
    degree_seqs(D);
  }
  return out;
}

// Points are Z7, lines {i, i+1, i+3}. All vertices share one rotation pattern
// of neighbour differences with each line's two darts opposite, and the sign
// of an edge depends only on its difference class (1, 2 or 3) with an odd
// number of negative classes. Returns the 32 candidates.
struct FanoCandidate {
  std::vector<int> pattern;  // neighbour differences, counterclockwise
  std::array<int, 3> sign;   // for difference classes 1, 2, 3
  ql::EmbeddingScheme scheme;
};

inline std::vector<FanoCandidate> fano_symmetric_candidates() {
  // darts of the three lines through 0: {1,3}, {6,2}, {4,5}
  const std::vector<std::array<int, 2>> pairs = {{1, 3}, {6, 2}, {4, 5}};
  std::vector<std::vector<int>> patterns;
  std::vector<int> order = {0, 1, 2};
  std::set<std::vector<int>> seen;
  do {
    for (int flips = 0; flips < 8; ++flips) {
      std::vector<int> pat(6);
      for (int k = 0; k < 3; ++k) {
        auto pr = pairs[order[k]];
        if ((flips >> k) & 1) std::swap(pr[0], pr[1]);
        pat[k] = pr[0];
        pat[k + 3] = pr[1];
      }
      // cyclic canonical form: start at difference 1
      auto it = std::find(pat.begin(), pat.end(), 1);
      std::rotate(pat.begin(), it, pat.end());
      if (seen.insert(pat).second) patterns.push_back(pat);
    }
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<FanoCandidate> out;
  for (const auto& pat : patterns) {
    for (int mask = 0; mask < 8; ++mask) {
      std::array<int, 3> sign{(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 4) ? -1 : 1};
      if (sign[0] * sign[1] * sign[2] != -1) continue;
      ql::EmbeddingScheme s;
      s.vertex_count = 7;
      std::map<std::pair<int, int>, std::size_t> dart;  // (from, to) -> dart
      for (int a = 0; a < 7; ++a) {
        for (int diff : {1, 2, 3}) {
          int b = (a + diff) % 7;
          std::size_t e = s.signature.size();
          s.signature.push_back(sign[diff - 1]);
          s.dart_vertex.push_back(static_cast<std::size_t>(a));
          s.dart_vertex.push_back(static_cast<std::size_t>(b));
          s.edge_line.push_back(0);
          dart[{a, b}] = 2 * e;
          dart[{b, a}] = 2 * e + 1;
        }
      }
      s.rotation.assign(7, {});
      s.opposite.assign(s.dart_count(), ql::npos);
      for (int v = 0; v < 7; ++v) {
        for (int diff : pat) s.rotation[static_cast<std::size_t>(v)].push_back(dart[{v, (v + diff) % 7}]);
        for (const auto& pr : pairs) {
          std::size_t x = dart[{v, (v + pr[0]) % 7}], y = dart[{v, (v + pr[1]) % 7}];
          s.opposite[x] = y;
          s.opposite[y] = x;
        }
      }
      for (int v = 0; v < 7; ++v) s.vertex_labels.push_back(std::to_string(v));
      out.push_back({pat, sign, std::move(s)});
    }
  }
  return out;
}

}  // namespace oracle
