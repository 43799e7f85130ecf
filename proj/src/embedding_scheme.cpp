#include "quasiline/embedding_scheme.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "quasiline/error.hpp"

namespace quasiline {

void validate_scheme(const EmbeddingScheme& s) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidScheme, why); };
  if (s.dart_count() != 2 * s.edge_count()) fail("need exactly two darts per edge");
  if (s.rotation.size() != s.vertex_count) fail("one rotation list per vertex required");
  for (int sg : s.signature) {
    if (sg != 1 && sg != -1) fail("signature entries must be +1 or -1");
  }
  std::vector<int> seen(s.dart_count(), 0);
  for (std::size_t v = 0; v < s.vertex_count; ++v) {
    for (std::size_t d : s.rotation[v]) {
      if (d >= s.dart_count()) fail("rotation of vertex " + std::to_string(v) + " names unknown dart");
      if (s.dart_vertex[d] != v) fail("dart " + std::to_string(d) + " listed at the wrong vertex");
      ++seen[d];
    }
  }
  for (std::size_t d = 0; d < s.dart_count(); ++d) {
    if (seen[d] != 1) fail("dart " + std::to_string(d) + " appears " + std::to_string(seen[d]) + " times in rotations");
  }
  if (!s.opposite.empty()) {
    if (s.opposite.size() != s.dart_count()) fail("opposite map has wrong size");
    for (std::size_t d = 0; d < s.dart_count(); ++d) {
      std::size_t o = s.opposite[d];
      if (o == npos) continue;
      if (o >= s.dart_count() || o == d || s.opposite[o] != d || s.dart_vertex[o] != s.dart_vertex[d]) {
        fail("opposite map is not a fixed-point-free involution at each vertex");
      }
    }
  }
  if (!s.edge_line.empty() && s.edge_line.size() != s.edge_count()) fail("edge_line has wrong size");
}

std::vector<std::size_t> rotation_positions(const EmbeddingScheme& s) {
  std::vector<std::size_t> pos(s.dart_count(), npos);
  for (const auto& rot : s.rotation) {
    for (std::size_t i = 0; i < rot.size(); ++i) pos[rot[i]] = i;
  }
  return pos;
}

std::vector<Face> trace_faces(const EmbeddingScheme& s) {
  const auto pos = rotation_positions(s);
  // state = 2*dart + (sigma < 0)
  auto state = [](std::size_t d, int sigma) { return 2 * d + (sigma < 0 ? 1 : 0); };
  std::vector<char> done(2 * s.dart_count(), 0);
  std::vector<Face> faces;
  for (std::size_t d0 = 0; d0 < s.dart_count(); ++d0) {
    for (int sigma0 : {1, -1}) {
      if (done[state(d0, sigma0)]) continue;
      Face face;
      std::size_t d = d0;
      int sigma = sigma0;
      do {
        done[state(d, sigma)] = 1;
        face.darts.push_back(d);
        const int lam = s.signature[EmbeddingScheme::edge_of(d)];
        // the same corner walked backwards, so the reverse orbit is skipped
        done[state(EmbeddingScheme::twin(d), -sigma * lam)] = 1;
        std::size_t t = EmbeddingScheme::twin(d);
        sigma *= lam;
        const auto& rot = s.rotation[s.dart_vertex[t]];
        std::size_t k = rot.size();
        std::size_t i = pos[t];
        d = sigma > 0 ? rot[(i + 1) % k] : rot[(i + k - 1) % k];
      } while (d != d0 || sigma != sigma0);
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

namespace {

std::vector<std::vector<std::size_t>> incident_edges(const EmbeddingScheme& s) {
  std::vector<std::vector<std::size_t>> inc(s.vertex_count);
  for (std::size_t d = 0; d < s.dart_count(); ++d) inc[s.dart_vertex[d]].push_back(d);
  return inc;
}

}  // namespace

bool is_connected(const EmbeddingScheme& s) {
  if (s.vertex_count == 0) return true;
  auto inc = incident_edges(s);
  std::vector<char> seen(s.vertex_count, 0);
  std::deque<std::size_t> q{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop_front();
    for (std::size_t d : inc[v]) {
      std::size_t u = s.dart_vertex[EmbeddingScheme::twin(d)];
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        q.push_back(u);
      }
    }
  }
  return count == s.vertex_count;
}

std::vector<int> switching_signs(const EmbeddingScheme& s) {
  if (!is_connected(s)) throw Error(ErrorKind::Disconnected, "embedding scheme is not connected");
  std::vector<int> sign(s.vertex_count, 0);
  if (s.vertex_count == 0) return sign;
  auto inc = incident_edges(s);
  std::deque<std::size_t> q{0};
  sign[0] = 1;
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop_front();
    for (std::size_t d : inc[v]) {
      std::size_t u = s.dart_vertex[EmbeddingScheme::twin(d)];
      if (sign[u] == 0) {
        sign[u] = sign[v] * s.signature[EmbeddingScheme::edge_of(d)];
        q.push_back(u);
      }
    }
  }
  return sign;
}

bool is_orientable(const EmbeddingScheme& s) {
  auto sign = switching_signs(s);
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    std::size_t u = s.dart_vertex[2 * e], v = s.dart_vertex[2 * e + 1];
    if (s.signature[e] != sign[u] * sign[v]) return false;
  }
  return true;
}

EmbeddingScheme switch_vertex(const EmbeddingScheme& s, std::size_t v) {
  if (v >= s.vertex_count) throw Error(ErrorKind::IndexOutOfRange, "no vertex " + std::to_string(v));
  EmbeddingScheme out = s;
  std::reverse(out.rotation[v].begin(), out.rotation[v].end());
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    bool a = s.dart_vertex[2 * e] == v, b = s.dart_vertex[2 * e + 1] == v;
    if (a != b) out.signature[e] = -out.signature[e];
  }
  return out;
}

EmbeddingScheme relabel_vertices(const EmbeddingScheme& s, const std::vector<std::size_t>& perm) {
  if (perm.size() != s.vertex_count) throw Error(ErrorKind::InvalidInput, "relabeling has wrong size");
  EmbeddingScheme out = s;
  for (std::size_t d = 0; d < s.dart_count(); ++d) out.dart_vertex[d] = perm[s.dart_vertex[d]];
  for (std::size_t v = 0; v < s.vertex_count; ++v) out.rotation[perm[v]] = s.rotation[v];
  if (!s.vertex_labels.empty()) {
    for (std::size_t v = 0; v < s.vertex_count; ++v) out.vertex_labels[perm[v]] = s.vertex_labels[v];
  }
  return out;
}

}  // namespace quasiline
