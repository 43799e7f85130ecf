#include "quasiline/mutation.hpp"

#include <algorithm>
#include <string>

#include "quasiline/error.hpp"

namespace quasiline {

namespace {

bool touches(const Event& e, std::size_t lo, std::size_t hi) { return e.start <= hi && lo <= e.last(); }

bool clear_between(const WiringDiagram& d, std::size_t a, std::size_t b, std::size_t lo, std::size_t hi) {
  for (std::size_t k = a + 1; k < b; ++k) {
    if (touches(d.event(k), lo, hi)) return false;
  }
  return true;
}

bool is_digon(const WiringDiagram& d, std::size_t first, std::size_t second) {
  if (first >= second || second >= d.size()) return false;
  const Event& a = d.event(first);
  const Event& b = d.event(second);
  if (a.length != 2 || b.length != 2 || a.start != b.start) return false;
  return clear_between(d, first, second, a.start, a.start + 1);
}

bool is_triangle(const WiringDiagram& d, const std::array<std::size_t, 3>& t) {
  if (!(t[0] < t[1] && t[1] < t[2] && t[2] < d.size())) return false;
  const Event& a = d.event(t[0]);
  const Event& b = d.event(t[1]);
  const Event& c = d.event(t[2]);
  if (a.length != 2 || b.length != 2 || c.length != 2 || a.start != c.start) return false;
  if (b.start != a.start + 1 && b.start + 1 != a.start) return false;
  const std::size_t lo = std::min(a.start, b.start), hi = lo + 2;
  return clear_between(d, t[0], t[1], lo, hi) && clear_between(d, t[1], t[2], lo, hi);
}

}  // namespace

WiringDiagram insert_digon(const WiringDiagram& d, std::size_t position, std::size_t slot) {
  if (position < 1 || position + 1 > d.n()) {
    throw Error(ErrorKind::IndexOutOfRange, "no adjacent positions " + std::to_string(position) + "," +
                                                std::to_string(position + 1));
  }
  if (slot > d.size()) throw Error(ErrorKind::IndexOutOfRange, "no event slot " + std::to_string(slot));
  auto events = d.events();
  Event e{position, 2, std::nullopt};
  events.insert(events.begin() + static_cast<std::ptrdiff_t>(slot), {e, e});
  return WiringDiagram(d.n(), std::move(events), d.wire_labels());
}

WiringDiagram remove_digon(const WiringDiagram& d, std::size_t first, std::size_t second) {
  if (!is_digon(d, first, second)) {
    throw Error(ErrorKind::NoSuchFace, "events " + std::to_string(first) + " and " + std::to_string(second) +
                                           " do not bound a digon");
  }
  if (d.event(first).designated() || d.event(second).designated()) {
    throw Error(ErrorKind::NotAdmissible, "digon removal would move a designated crossing");
  }
  auto events = d.events();
  events.erase(events.begin() + static_cast<std::ptrdiff_t>(second));
  events.erase(events.begin() + static_cast<std::ptrdiff_t>(first));
  return WiringDiagram(d.n(), std::move(events), d.wire_labels());
}

WiringDiagram triangle_move(const WiringDiagram& d, std::array<std::size_t, 3> t) {
  if (!is_triangle(d, t)) throw Error(ErrorKind::NoSuchFace, "events do not bound a triangle");
  for (std::size_t i : t) {
    if (d.event(i).designated()) throw Error(ErrorKind::NotAdmissible, "triangle move would move a designated crossing");
  }
  auto events = d.events();
  const std::size_t outer = events[t[0]].start, inner = events[t[1]].start;
  events[t[0]].start = inner;
  events[t[1]].start = outer;
  events[t[2]].start = inner;
  return WiringDiagram(d.n(), std::move(events), d.wire_labels());
}

std::vector<std::pair<std::size_t, std::size_t>> digon_candidates(const WiringDiagram& d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Event& a = d.event(i);
    if (a.length != 2) continue;
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (touches(d.event(j), a.start, a.start + 1)) {
        if (is_digon(d, i, j)) out.emplace_back(i, j);
        break;
      }
    }
  }
  return out;
}

std::vector<std::array<std::size_t, 3>> triangle_candidates(const WiringDiagram& d) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Event& a = d.event(i);
    if (a.length != 2) continue;
    for (std::size_t lo : {a.start, a.start - 1}) {
      if (lo < 1 || lo + 2 > d.n()) continue;
      // next two events touching lo..lo+2
      std::vector<std::size_t> next;
      for (std::size_t j = i + 1; j < d.size() && next.size() < 2; ++j) {
        if (touches(d.event(j), lo, lo + 2)) next.push_back(j);
      }
      if (next.size() == 2 && is_triangle(d, {i, next[0], next[1]})) out.push_back({i, next[0], next[1]});
    }
  }
  return out;
}

}  // namespace quasiline
