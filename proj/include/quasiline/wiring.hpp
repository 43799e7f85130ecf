#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quasiline/perm_sequence.hpp"
#include "quasiline/realization.hpp"

namespace quasiline {

/// One crossing event: the wires at positions start..start+length-1 meet in a
/// point and leave in reversed order. A labelled event is a designated point.
struct Event {
  std::size_t start;
  std::size_t length;
  std::optional<std::string> point;

  bool designated() const noexcept { return point.has_value(); }
  std::size_t last() const noexcept { return start + length - 1; }

  friend bool operator==(const Event&, const Event&) = default;
};

/// Generalized wiring diagram. Wires 1..n enter on the left in order, wire 1
/// on top; events happen at distinct x-slots in list order (0-based event
/// indices). Every pair of wires crosses an odd number of times, so the wires
/// leave on the right in reverse order and the two ends of each wire are
/// antipodal on the boundary of the disk.
class WiringDiagram {
 public:
  /// Throws Error(InvalidDiagram) for n < 2, bad windows or an even pair count.
  WiringDiagram(std::size_t n, std::vector<Event> events, std::vector<std::string> wire_labels = {});

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return events_.size(); }
  const std::vector<Event>& events() const noexcept { return events_; }
  const Event& event(std::size_t i) const { return events_.at(i); }
  /// Empty, or one label per wire.
  const std::vector<std::string>& wire_labels() const noexcept { return wire_labels_; }
  std::string wire_label(std::size_t w) const;

  friend bool operator==(const WiringDiagram& a, const WiringDiagram& b) {
    return a.n_ == b.n_ && a.events_ == b.events_;
  }

 private:
  std::size_t n_;
  std::vector<Event> events_;
  std::vector<std::string> wire_labels_;
};

/// Throws Error(NotGeneralized) unless seq is generalized allowable. A
/// designated move is labelled with its move index as text.
WiringDiagram diagram_from_sequence(const PermSequence& seq);
WiringDiagram diagram_from_realization(const Realization& r);

PermSequence sequence_from_diagram(const WiringDiagram& d);

/// Wire order before event i (i = size() gives the final order).
Permutation wires_before(const WiringDiagram& d, std::size_t i);

/// Wires in event i's window, top to bottom just before it.
std::vector<std::size_t> event_wires(const WiringDiagram& d, std::size_t i);

/// events_on_wire[w-1] lists the events on wire w in time order.
std::vector<std::vector<std::size_t>> events_on_wires(const WiringDiagram& d);

/// Sum of C(length, 2) over all events.
std::size_t crossing_number(const WiringDiagram& d);

std::size_t designated_count(const WiringDiagram& d);

}  // namespace quasiline
