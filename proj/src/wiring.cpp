#include "quasiline/wiring.hpp"

#include <algorithm>
#include <string>

#include "quasiline/error.hpp"

namespace quasiline {

namespace {

std::vector<Move> moves_of(const std::vector<Event>& events) {
  std::vector<Move> moves;
  moves.reserve(events.size());
  for (const Event& e : events) moves.push_back({e.start, e.length});
  return moves;
}

}  // namespace

WiringDiagram::WiringDiagram(std::size_t n, std::vector<Event> events, std::vector<std::string> wire_labels)
    : n_(n), events_(std::move(events)), wire_labels_(std::move(wire_labels)) {
  if (n_ < 2) throw Error(ErrorKind::InvalidDiagram, "a diagram needs at least two wires");
  if (!wire_labels_.empty() && wire_labels_.size() != n_) {
    throw Error(ErrorKind::InvalidDiagram, "wire labels must be given for all wires or none");
  }
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const Event& e = events_[i];
    if (e.start < 1 || e.length < 2 || e.last() > n_) {
      throw Error(ErrorKind::InvalidDiagram, "event " + std::to_string(i) + " has an invalid window");
    }
  }
  PermSequence seq(n_, moves_of(events_));
  if (permutation_after(seq, seq.size()) != reverse_permutation(n_)) {
    throw Error(ErrorKind::InvalidDiagram, "some pair of wires crosses an even number of times");
  }
}

std::string WiringDiagram::wire_label(std::size_t w) const {
  if (w < 1 || w > n_) throw Error(ErrorKind::IndexOutOfRange, "no wire " + std::to_string(w));
  return wire_labels_.empty() ? std::to_string(w) : wire_labels_[w - 1];
}

WiringDiagram diagram_from_sequence(const PermSequence& seq) {
  if (seq.n() < 2 || classify(seq) == SequenceClass::Partial) {
    throw Error(ErrorKind::NotGeneralized, "sequence does not end at the reverse permutation");
  }
  std::vector<Event> events;
  for (std::size_t i = 1; i <= seq.size(); ++i) {
    const Move& m = seq.move(i);
    Event e{m.start, m.length, std::nullopt};
    if (seq.is_designated(i)) e.point = std::to_string(i);
    events.push_back(std::move(e));
  }
  return WiringDiagram(seq.n(), std::move(events));
}

WiringDiagram diagram_from_realization(const Realization& r) {
  WiringDiagram plain = diagram_from_sequence(r.seq);
  std::vector<Event> events = plain.events();
  for (const auto& [idx, label] : r.point_of_move) events[idx - 1].point = label;
  return WiringDiagram(plain.n(), std::move(events), r.wire_labels);
}

PermSequence sequence_from_diagram(const WiringDiagram& d) {
  std::vector<std::size_t> designated;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.event(i).designated()) designated.push_back(i + 1);
  }
  return PermSequence(d.n(), moves_of(d.events()), std::move(designated));
}

Permutation wires_before(const WiringDiagram& d, std::size_t i) {
  if (i > d.size()) throw Error(ErrorKind::IndexOutOfRange, "no event slot " + std::to_string(i));
  Permutation p = identity_permutation(d.n());
  for (std::size_t k = 0; k < i; ++k) {
    const Event& e = d.event(k);
    std::reverse(p.begin() + static_cast<std::ptrdiff_t>(e.start - 1), p.begin() + static_cast<std::ptrdiff_t>(e.last()));
  }
  return p;
}

std::vector<std::size_t> event_wires(const WiringDiagram& d, std::size_t i) {
  Permutation p = wires_before(d, i);
  const Event& e = d.event(i);
  return {p.begin() + static_cast<std::ptrdiff_t>(e.start - 1), p.begin() + static_cast<std::ptrdiff_t>(e.last())};
}

std::vector<std::vector<std::size_t>> events_on_wires(const WiringDiagram& d) {
  std::vector<std::vector<std::size_t>> out(d.n());
  Permutation p = identity_permutation(d.n());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Event& e = d.event(i);
    for (std::size_t k = e.start - 1; k < e.last(); ++k) out[p[k] - 1].push_back(i);
    std::reverse(p.begin() + static_cast<std::ptrdiff_t>(e.start - 1), p.begin() + static_cast<std::ptrdiff_t>(e.last()));
  }
  return out;
}

std::size_t crossing_number(const WiringDiagram& d) {
  std::size_t total = 0;
  for (const Event& e : d.events()) total += e.length * (e.length - 1) / 2;
  return total;
}

std::size_t designated_count(const WiringDiagram& d) {
  return static_cast<std::size_t>(
      std::count_if(d.events().begin(), d.events().end(), [](const Event& e) { return e.designated(); }));
}

}  // namespace quasiline
