#include "quasiline/fingerprint.hpp"

#include <deque>
#include <optional>
#include <sstream>
#include <vector>

#include "quasiline/error.hpp"

namespace quasiline {

namespace {

// Code of the scheme as seen from dart d0 read in direction eps, or nullopt
// as soon as it exceeds `best` (so the minimum search can prune).
std::optional<std::vector<long>> code_from(const EmbeddingScheme& s, const std::vector<std::size_t>& pos,
                                           std::size_t d0, int eps, const std::vector<long>* best) {
  const std::size_t V = s.vertex_count;
  std::vector<std::size_t> label(V, npos), entry(V, npos);
  std::vector<int> orient(V, 0);
  std::deque<std::size_t> queue;
  std::size_t next = 0;

  auto discover = [&](std::size_t v, std::size_t dart, int o) {
    label[v] = next++;
    entry[v] = dart;
    orient[v] = o;
    queue.push_back(v);
  };
  // index of dart x in v's reading order
  auto reading_index = [&](std::size_t v, std::size_t x) {
    const std::size_t k = s.rotation[v].size();
    const std::size_t off = (pos[x] + k - pos[entry[v]]) % k;
    return orient[v] > 0 ? off : (k - off) % k;
  };

  std::vector<long> code;
  code.reserve(3 * s.dart_count() + V);
  bool tied = best != nullptr;
  auto emit = [&](long value) {
    if (tied) {
      const long ref = (*best)[code.size()];
      if (value > ref) return false;
      if (value < ref) tied = false;
    }
    code.push_back(value);
    return true;
  };

  discover(s.dart_vertex[d0], d0, eps);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    const auto& rot = s.rotation[v];
    const std::size_t k = rot.size();
    if (!emit(static_cast<long>(k))) return std::nullopt;
    const std::size_t p0 = pos[entry[v]];
    for (std::size_t step = 0; step < k; ++step) {
      const std::size_t x = rot[orient[v] > 0 ? (p0 + step) % k : (p0 + k - step) % k];
      const std::size_t t = EmbeddingScheme::twin(x);
      const std::size_t u = s.dart_vertex[t];
      const int lam = s.signature[EmbeddingScheme::edge_of(x)];
      if (label[u] == npos) discover(u, t, orient[v] * lam);
      if (!emit(static_cast<long>(label[u])) || !emit(static_cast<long>(reading_index(u, t))) ||
          !emit(orient[u] * orient[v] * lam)) {
        return std::nullopt;
      }
    }
  }
  return code;
}

}  // namespace

std::string fingerprint(const EmbeddingScheme& s) {
  validate_scheme(s);
  if (!is_connected(s)) throw Error(ErrorKind::Disconnected, "fingerprint needs a connected scheme");
  const auto pos = rotation_positions(s);
  std::vector<long> best;
  bool have = false;
  for (std::size_t d = 0; d < s.dart_count(); ++d) {
    for (int eps : {1, -1}) {
      auto c = code_from(s, pos, d, eps, have ? &best : nullptr);
      if (c && (!have || *c < best)) {
        best = std::move(*c);
        have = true;
      }
    }
  }
  std::ostringstream out;
  out << "V" << s.vertex_count << "E" << s.edge_count() << ":";
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (i) out << ',';
    out << best[i];
  }
  return out.str();
}

}  // namespace quasiline
