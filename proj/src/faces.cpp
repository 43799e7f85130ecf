#include "quasiline/faces.hpp"

#include <algorithm>
#include <iterator>

namespace quasiline {

namespace {

struct WireDarts {
  EmbeddingScheme scheme;
  std::vector<std::size_t> infinity;
};

WireDarts build(const WiringDiagram& d) {
  EmbeddingScheme s;
  s.vertex_count = d.size();
  const auto on_wire = events_on_wires(d);
  // left_dart[w][k], right_dart[w][k] for the k-th event on wire w
  std::vector<std::vector<std::size_t>> left(d.n()), right(d.n());
  std::vector<std::size_t> infinity(d.n());
  auto add_edge = [&](std::size_t u, std::size_t v, int sign, std::size_t line) {
    std::size_t e = s.signature.size();
    s.signature.push_back(sign);
    s.dart_vertex.push_back(u);
    s.dart_vertex.push_back(v);
    s.edge_line.push_back(line);
    return e;
  };
  for (std::size_t w = 0; w < d.n(); ++w) {
    const auto& ev = on_wire[w];
    left[w].assign(ev.size(), npos);
    right[w].assign(ev.size(), npos);
    for (std::size_t k = 1; k < ev.size(); ++k) {
      std::size_t e = add_edge(ev[k - 1], ev[k], 1, w + 1);
      right[w][k - 1] = 2 * e;
      left[w][k] = 2 * e + 1;
    }
    std::size_t e = add_edge(ev.back(), ev.front(), -1, w + 1);
    right[w][ev.size() - 1] = 2 * e;
    left[w][0] = 2 * e + 1;
    infinity[w] = e;
  }

  s.rotation.assign(d.size(), {});
  s.opposite.assign(s.dart_count(), npos);
  std::vector<std::size_t> seen_on(d.n(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto ws = event_wires(d, i);
    auto& rot = s.rotation[i];
    for (std::size_t w : ws) rot.push_back(right[w - 1][seen_on[w - 1]]);
    for (std::size_t w : ws) rot.push_back(left[w - 1][seen_on[w - 1]]);
    for (std::size_t w : ws) {
      std::size_t r = right[w - 1][seen_on[w - 1]], l = left[w - 1][seen_on[w - 1]];
      s.opposite[r] = l;
      s.opposite[l] = r;
      ++seen_on[w - 1];
    }
  }
  return {std::move(s), std::move(infinity)};
}

}  // namespace

EmbeddingScheme disk_scheme(const WiringDiagram& d) { return build(d).scheme; }

std::vector<std::size_t> infinity_edges(const WiringDiagram& d) { return build(d).infinity; }

std::vector<DiskFace> trace_faces_disk(const WiringDiagram& d) {
  EmbeddingScheme s = disk_scheme(d);
  std::vector<DiskFace> out;
  for (Face& f : trace_faces(s)) {
    DiskFace df;
    for (std::size_t dart : f.darts) df.vertices.push_back(s.dart_vertex[dart]);
    df.darts = std::move(f.darts);
    out.push_back(std::move(df));
  }
  return out;
}

std::vector<DiskFace> detect_digons(const WiringDiagram& d) {
  auto faces = trace_faces_disk(d);
  std::vector<DiskFace> out;
  std::copy_if(faces.begin(), faces.end(), std::back_inserter(out), [](const DiskFace& f) { return f.length() == 2; });
  return out;
}

}  // namespace quasiline
