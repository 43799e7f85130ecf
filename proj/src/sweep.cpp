#include "quasiline/sweep.hpp"

#include <functional>
#include <queue>

#include "quasiline/error.hpp"

namespace quasiline {

SweepDigraph sweep_digraph(const WiringDiagram& d) {
  SweepDigraph g;
  g.vertex_count = d.size();
  auto on_wire = events_on_wires(d);
  for (std::size_t w = 0; w < on_wire.size(); ++w) {
    for (std::size_t k = 1; k < on_wire[w].size(); ++k) g.arcs.push_back({on_wire[w][k - 1], on_wire[w][k], w + 1});
  }
  return g;
}

namespace {

// Returns the order; shorter than vertex_count iff there is a cycle.
std::vector<std::size_t> kahn(const SweepDigraph& g) {
  std::vector<std::vector<std::size_t>> out(g.vertex_count);
  std::vector<std::size_t> indeg(g.vertex_count, 0);
  for (const Arc& a : g.arcs) {
    if (a.from >= g.vertex_count || a.to >= g.vertex_count) {
      throw Error(ErrorKind::InvalidInput, "arc references a missing vertex");
    }
    out[a.from].push_back(a.to);
    ++indeg[a.to];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t u : out[v]) {
      if (--indeg[u] == 0) ready.push(u);
    }
  }
  return order;
}

}  // namespace

bool is_acyclic(const SweepDigraph& g) { return kahn(g).size() == g.vertex_count; }

std::vector<std::size_t> topological_order(const SweepDigraph& g) {
  auto order = kahn(g);
  if (order.size() != g.vertex_count) {
    throw Error(ErrorKind::CyclicInput, "sweep digraph has a directed cycle; the marking is not proper");
  }
  return order;
}

std::vector<std::size_t> topological_sweep(const WiringDiagram& d) { return topological_order(sweep_digraph(d)); }

}  // namespace quasiline
