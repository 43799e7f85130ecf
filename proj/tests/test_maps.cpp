#include "doctest.h"
#include "quasiline/embedding_scheme.hpp"
#include "quasiline/fingerprint.hpp"
#include "quasiline/mutation.hpp"
#include "quasiline/realization.hpp"
#include "quasiline/surface_map.hpp"
#include "quasiline/wiring.hpp"
#include "support.hpp"

using namespace quasiline;
using oracle::error_kind;

namespace {

WiringDiagram realized(const IncidenceStructure& c) { return diagram_from_realization(realize(c, default_plan(c))); }

// Tetrahedron drawn in the plane.
EmbeddingScheme planar_k4() {
  EmbeddingScheme s;
  s.vertex_count = 4;
  std::vector<std::pair<std::size_t, std::size_t>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}};
  for (auto [u, v] : edges) {
    s.dart_vertex.push_back(u);
    s.dart_vertex.push_back(v);
    s.signature.push_back(1);
  }
  // centre 0, outer triangle 1, 2, 3 counterclockwise
  s.rotation = {{0, 2, 4}, {1, 11, 6}, {3, 7, 8}, {5, 9, 10}};
  return s;
}

std::vector<std::size_t> face_lengths(const EmbeddingScheme& s) {
  std::vector<std::size_t> out;
  for (const auto& f : trace_faces(s)) out.push_back(f.length());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("planar control") {
  auto s = planar_k4();
  validate_scheme(s);
  auto m = trace_and_summarize(s);
  CHECK(m.F == 4);
  CHECK(m.euler == 2);
  CHECK(m.orientable);
  CHECK(m.genus == 0);
  CHECK(m.face_vector == std::vector<std::size_t>{3, 3, 3, 3});
}

TEST_CASE("switching keeps faces") {
  auto s = planar_k4();
  auto t = switch_vertex(switch_vertex(s, 2), 0);
  CHECK(face_lengths(t) == face_lengths(s));
  CHECK(is_orientable(t));
  CHECK(fingerprint(t) == fingerprint(s));
  auto signs = switching_signs(t);
  CHECK(signs.size() == 4);
}

TEST_CASE("invalid schemes") {
  auto s = planar_k4();
  s.signature[0] = 0;
  CHECK(error_kind([&] { validate_scheme(s); }) == ErrorKind::InvalidScheme);
  s = planar_k4();
  s.rotation[0].pop_back();
  CHECK(error_kind([&] { validate_scheme(s); }) == ErrorKind::InvalidScheme);
  EmbeddingScheme two;
  two.vertex_count = 2;
  two.rotation = {{}, {}};
  CHECK(error_kind([&] { fingerprint(two); }) == ErrorKind::Disconnected);
}

TEST_CASE("one-vertex projective plane") {
  EmbeddingScheme s;
  s.vertex_count = 1;
  s.dart_vertex = {0, 0};
  s.signature = {-1};
  s.rotation = {{0, 1}};
  auto m = trace_and_summarize(s);
  CHECK(m.F == 1);
  CHECK(m.euler == 1);
  CHECK_FALSE(m.orientable);
  CHECK(m.genus == 1);
}

TEST_CASE("fano map from the default realization") {
  auto d = realized(oracle::fano());
  auto s = scheme_from_diagram(d);
  validate_scheme(s);
  CHECK(s.vertex_count == 7);
  CHECK(s.edge_count() == 21);
  for (const auto& r : s.rotation) CHECK(r.size() == 6);
  auto m = trace_and_summarize(s);
  CHECK_FALSE(m.orientable);
  std::size_t sum = 0;
  for (std::size_t f : m.face_vector) sum += f;
  CHECK(sum == 2 * m.E);
  CHECK(m.euler == static_cast<long long>(m.V) - static_cast<long long>(m.E) + static_cast<long long>(m.F));
  CHECK(m.face_vector == oracle::face_lengths_by_flags(s));
  auto walks = straight_ahead_walks(s);
  CHECK(walks.size() == 7);
  for (const auto& w : walks) {
    CHECK(w.darts.size() == 3);
    CHECK(is_simple(s, w));
    CHECK(negative_edges(s, w) % 2 == 1);
  }
}

TEST_CASE("triangle map") {
  auto s = scheme_from_diagram(realized(oracle::triangle()));
  CHECK(s.vertex_count == 3);
  CHECK(s.edge_count() == 6);
  auto walks = straight_ahead_walks(s);
  CHECK(walks.size() == 3);
  for (const auto& w : walks) CHECK(w.darts.size() == 2);
}

TEST_CASE("wire without a point") {
  WiringDiagram d(3, {{1, 2, {"x"}}, {2, 2, {}}, {1, 2, {}}});
  CHECK(error_kind([&] { scheme_from_diagram(d); }) == ErrorKind::WireWithoutPoint);
}

TEST_CASE("fano symmetric candidate search") {
  auto cands = oracle::fano_symmetric_candidates();
  CHECK(cands.size() == 32);
  std::size_t hits = 0;
  for (const auto& c : cands) {
    auto f = oracle::face_lengths_by_flags(c.scheme);
    if (f != std::vector<std::size_t>{5, 5, 5, 5, 5, 5, 5, 7}) continue;
    ++hits;
    auto m = trace_and_summarize(c.scheme);
    CHECK(m.face_vector == f);
    CHECK(m.euler == -6);
    CHECK(m.genus == 8);
    CHECK_FALSE(m.orientable);
    auto walks = straight_ahead_walks(c.scheme);
    CHECK(walks.size() == 7);
    for (const auto& w : walks) CHECK(negative_edges(c.scheme, w) % 2 == 1);
  }
  CHECK(hits > 0);
}

TEST_CASE("fingerprint invariances") {
  auto s = scheme_from_diagram(realized(oracle::fano()));
  oracle::Rng rng(3);
  std::vector<std::size_t> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  const auto fp = fingerprint(s);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    auto t = relabel_vertices(s, perm);
    for (std::size_t v = 0; v < 7; ++v) {
      if (rng() % 2) t = switch_vertex(t, v);
    }
    CHECK(fingerprint(t) == fp);
  }
  // different face vectors give different codes
  for (const auto& c : oracle::fano_symmetric_candidates()) {
    if (oracle::face_lengths_by_flags(c.scheme) != oracle::face_lengths_by_flags(s)) {
      CHECK(fingerprint(c.scheme) != fp);
    }
  }
}

TEST_CASE("digon insertion keeps the fano fingerprint") {
  auto d = realized(oracle::fano());
  auto fp = fingerprint(scheme_from_diagram(d));
  auto e = insert_digon(d, 3, 2);
  CHECK(fingerprint(scheme_from_diagram(e)) == fp);
}

TEST_CASE("fingerprint agrees with brute force on small schemes") {
  auto all = oracle::all_small_schemes(3, 4);
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < all.size(); ++i) groups[fingerprint(all[i])].push_back(i);
  for (const auto& [code, members] : groups) {
    for (std::size_t k = 1; k < members.size(); ++k) CHECK(oracle::maps_isomorphic(all[members[0]], all[members[k]]));
  }
  std::vector<std::size_t> reps;
  for (const auto& [code, members] : groups) reps.push_back(members[0]);
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) CHECK_FALSE(oracle::maps_isomorphic(all[reps[a]], all[reps[b]]));
  }
}
