#include "quasiline/arrangement.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "quasiline/error.hpp"

namespace quasiline {

void validate_arrangement(const AbstractArrangement& a) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidInput, why); };
  if (a.n < 2) fail("an arrangement needs at least two lines");
  if (a.boundary.size() != 2 * a.n) fail("boundary must hold 2n tokens");
  std::vector<int> seen(a.n + 1, 0);
  for (std::size_t i = 0; i < a.n; ++i) {
    std::size_t l = a.boundary[i];
    if (l < 1 || l > a.n || a.boundary[i + a.n] != l) fail("boundary tokens are not antipodal pairs");
    ++seen[l];
  }
  for (std::size_t l = 1; l <= a.n; ++l) {
    if (seen[l] != 1) fail("line " + std::to_string(l) + " must reach infinity exactly once");
  }
  if (a.line_vertices.size() != a.n) fail("one vertex list per line required");
  std::vector<std::vector<std::size_t>> lines_at(a.vertex_count());
  for (std::size_t l = 1; l <= a.n; ++l) {
    for (std::size_t v : a.line_vertices[l - 1]) {
      if (v >= a.vertex_count()) fail("line " + std::to_string(l) + " names unknown vertex");
      lines_at[v].push_back(l);
    }
  }
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    std::sort(lines_at[v].begin(), lines_at[v].end());
    if (lines_at[v] != a.vertex_lines[v]) fail("vertex " + std::to_string(v) + " line set disagrees with line lists");
  }
}

AbstractArrangement induced_arrangement(const WiringDiagram& d) {
  AbstractArrangement a;
  a.n = d.n();
  for (int half = 0; half < 2; ++half) {
    for (std::size_t w = 1; w <= d.n(); ++w) a.boundary.push_back(w);
  }
  a.line_vertices = events_on_wires(d);
  a.vertex_lines.resize(d.size());
  a.vertex_labels.resize(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    a.vertex_lines[i] = event_wires(d, i);
    std::sort(a.vertex_lines[i].begin(), a.vertex_lines[i].end());
    a.vertex_labels[i] = d.event(i).point;
  }
  return a;
}

AbstractArrangement arrangement_at_infinity(const WiringDiagram& d, std::size_t wire) {
  if (wire < 1 || wire > d.n()) throw Error(ErrorKind::IndexOutOfRange, "no wire " + std::to_string(wire));
  if (d.n() < 3) throw Error(ErrorKind::InvalidInput, "need at least three wires to drop one");
  const auto on_wire = events_on_wires(d);
  const auto& mine = on_wire[wire - 1];

  // crossing event and side (above or below `wire` just before it) of every other wire
  std::map<std::size_t, std::size_t> cross_at;
  std::map<std::size_t, bool> above;
  for (std::size_t i : mine) {
    if (d.event(i).length != 2) throw Error(ErrorKind::InvalidInput, "line at infinity must meet others singly");
    auto ws = event_wires(d, i);
    std::size_t other = ws[0] == wire ? ws[1] : ws[0];
    if (cross_at.contains(other)) throw Error(ErrorKind::InvalidInput, "line at infinity must cross each line once");
    cross_at[other] = i;
    above[other] = ws[0] == other;
  }
  if (cross_at.size() != d.n() - 1) throw Error(ErrorKind::InvalidInput, "line at infinity must cross every line");

  // renumber the surviving wires 1..n-1 in wire order
  std::vector<std::size_t> line_of(d.n() + 1, 0);
  std::size_t next = 1;
  for (std::size_t w = 1; w <= d.n(); ++w) {
    if (w != wire) line_of[w] = next++;
  }

  AbstractArrangement a;
  a.n = d.n() - 1;
  for (int half = 0; half < 2; ++half) {
    for (std::size_t i : mine) {
      auto ws = event_wires(d, i);
      a.boundary.push_back(line_of[ws[0] == wire ? ws[1] : ws[0]]);
    }
  }
  a.line_vertices.resize(a.n);
  for (std::size_t w = 1; w <= d.n(); ++w) {
    if (w == wire) continue;
    const std::size_t c = cross_at[w];
    std::vector<std::size_t> before, after;
    for (std::size_t i : on_wire[w - 1]) {
      if (i < c) before.push_back(i);
      else if (i > c) after.push_back(i);
    }
    std::vector<std::size_t> list;
    if (above[w]) {
      list.assign(before.rbegin(), before.rend());
      list.insert(list.end(), after.rbegin(), after.rend());
    } else {
      list = after;
      list.insert(list.end(), before.begin(), before.end());
    }
    a.line_vertices[line_of[w] - 1] = std::move(list);
  }
  a.vertex_lines.resize(d.size());
  a.vertex_labels.resize(d.size());
  for (std::size_t l = 1; l <= a.n; ++l) {
    for (std::size_t v : a.line_vertices[l - 1]) a.vertex_lines[v].push_back(l);
  }
  for (std::size_t v = 0; v < d.size(); ++v) {
    std::sort(a.vertex_lines[v].begin(), a.vertex_lines[v].end());
    if (!a.vertex_lines[v].empty()) a.vertex_labels[v] = d.event(v).point;
  }
  return a;
}

std::vector<std::vector<std::size_t>> oriented_lines(const AbstractArrangement& a, std::size_t marking) {
  if (marking >= 2 * a.n) throw Error(ErrorKind::IndexOutOfRange, "marking outside 0..2n-1");
  std::vector<std::vector<std::size_t>> out(a.n);
  std::vector<char> started(a.n + 1, 0);
  for (std::size_t k = 0; k < 2 * a.n; ++k) {
    std::size_t tok = (marking + k) % (2 * a.n);
    std::size_t l = a.boundary[tok];
    if (started[l]) continue;
    started[l] = 1;
    out[l - 1] = a.line_vertices[l - 1];
    if (tok >= a.n) std::reverse(out[l - 1].begin(), out[l - 1].end());
  }
  return out;
}

bool is_proper_marking(const AbstractArrangement& a, std::size_t marking) {
  auto lines = oriented_lines(a, marking);
  for (std::size_t x = 0; x < a.n; ++x) {
    for (std::size_t y = x + 1; y < a.n; ++y) {
      std::vector<std::size_t> on_x, on_y;
      for (std::size_t v : lines[x]) {
        if (std::find(lines[y].begin(), lines[y].end(), v) != lines[y].end()) on_x.push_back(v);
      }
      for (std::size_t v : lines[y]) {
        if (std::find(lines[x].begin(), lines[x].end(), v) != lines[x].end()) on_y.push_back(v);
      }
      if (on_x != on_y) return false;
    }
  }
  return true;
}

std::optional<std::size_t> find_monotone_marking(const AbstractArrangement& a) {
  for (std::size_t g = 0; g < 2 * a.n; ++g) {
    if (is_proper_marking(a, g)) return g;
  }
  return std::nullopt;
}

SweepDigraph sweep_digraph(const AbstractArrangement& a, std::size_t marking) {
  SweepDigraph g;
  g.vertex_count = a.vertex_count();
  auto lines = oriented_lines(a, marking);
  for (std::size_t l = 0; l < a.n; ++l) {
    for (std::size_t k = 1; k < lines[l].size(); ++k) g.arcs.push_back({lines[l][k - 1], lines[l][k], l + 1});
  }
  return g;
}

SweptDiagram diagram_from_arrangement(const AbstractArrangement& a, std::size_t marking) {
  validate_arrangement(a);
  auto order = topological_order(sweep_digraph(a, marking));

  // the first n tokens after the gap are the starting ends, top to bottom
  std::vector<std::size_t> cut;
  for (std::size_t k = 0; k < a.n; ++k) cut.push_back(a.boundary[(marking + k) % (2 * a.n)]);
  std::vector<std::size_t> wire_of(a.n + 1);
  for (std::size_t k = 0; k < a.n; ++k) wire_of[cut[k]] = k + 1;

  std::vector<Event> events;
  std::vector<std::size_t> vertex_of_event;
  for (std::size_t v : order) {
    const auto& ls = a.vertex_lines[v];
    if (ls.empty()) continue;
    std::vector<std::size_t> at;
    for (std::size_t k = 0; k < cut.size(); ++k) {
      if (std::binary_search(ls.begin(), ls.end(), cut[k])) at.push_back(k);
    }
    if (at.size() != ls.size() || at.back() - at.front() + 1 != at.size()) {
      throw Error(ErrorKind::InvalidInput, "lines through vertex " + std::to_string(v) + " are not adjacent on the cut");
    }
    std::reverse(cut.begin() + static_cast<std::ptrdiff_t>(at.front()),
                 cut.begin() + static_cast<std::ptrdiff_t>(at.back() + 1));
    std::optional<std::string> label = v < a.vertex_labels.size() ? a.vertex_labels[v] : std::nullopt;
    events.push_back({at.front() + 1, at.size(), label});
    vertex_of_event.push_back(v);
  }
  std::vector<std::size_t> line_of_wire(a.n);
  for (std::size_t l = 1; l <= a.n; ++l) line_of_wire[wire_of[l] - 1] = l;
  return {WiringDiagram(a.n, std::move(events)), std::move(line_of_wire), std::move(vertex_of_event)};
}

}  // namespace quasiline
