#include "quasiline/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace quasiline {

namespace {

constexpr double kSlot = 40.0;
constexpr double kTrack = 30.0;
constexpr double kMargin = 40.0;
constexpr double kScale = 200.0;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string diagram_svg(const WiringDiagram& d) {
  const double width = 2 * kMargin + kSlot * static_cast<double>(d.size() + 1);
  const double height = 2 * kMargin + kTrack * static_cast<double>(d.n() - 1);
  auto y_of = [](double pos) { return kMargin + kTrack * (pos - 1); };
  auto x_of = [](std::size_t i) { return kMargin + kSlot * static_cast<double>(i + 1); };

  // polyline per wire
  std::vector<std::string> paths(d.n());
  Permutation order = identity_permutation(d.n());
  std::vector<std::size_t> pos(d.n() + 1);
  for (std::size_t k = 0; k < d.n(); ++k) pos[order[k]] = k + 1;
  for (std::size_t w = 1; w <= d.n(); ++w) paths[w - 1] = num(kMargin) + "," + num(y_of(static_cast<double>(w)));
  std::ostringstream marks;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Event& e = d.event(i);
    const double x = x_of(i);
    const double yc = y_of(static_cast<double>(e.start) + static_cast<double>(e.length - 1) / 2);
    for (std::size_t k = e.start; k <= e.last(); ++k) {
      std::size_t w = order[k - 1];
      std::size_t after = e.start + e.last() - k;
      paths[w - 1] += " " + num(x - kSlot / 3) + "," + num(y_of(static_cast<double>(k))) + " " + num(x) + "," +
                      num(yc) + " " + num(x + kSlot / 3) + "," + num(y_of(static_cast<double>(after)));
    }
    std::reverse(order.begin() + static_cast<std::ptrdiff_t>(e.start - 1),
                 order.begin() + static_cast<std::ptrdiff_t>(e.last()));
    if (e.designated()) {
      marks << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(yc) << "\" r=\"5\" fill=\"black\"/>\n";
      marks << "  <text x=\"" << num(x) << "\" y=\"" << num(yc - 9) << "\" font-size=\"10\" text-anchor=\"middle\">"
            << escape(*e.point) << "</text>\n";
    } else {
      marks << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(yc) << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
    }
  }
  for (std::size_t k = 1; k <= d.n(); ++k) {
    paths[order[k - 1] - 1] += " " + num(width - kMargin) + "," + num(y_of(static_cast<double>(k)));
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" data-scale=\"1\">\n";
  for (std::size_t w = 1; w <= d.n(); ++w) {
    out << "  <polyline fill=\"none\" stroke=\"steelblue\" points=\"" << paths[w - 1] << "\"/>\n";
    out << "  <text x=\"" << num(kMargin - 6) << "\" y=\"" << num(y_of(static_cast<double>(w)) + 4)
        << "\" font-size=\"10\" text-anchor=\"end\">" << escape(d.wire_label(w)) << "</text>\n";
  }
  out << marks.str() << "</svg>\n";
  return out.str();
}

std::string drawing_svg(const WiringDiagram& d, const StraightDrawing& g) {
  const double half = 1.6 * kScale;
  auto sx = [&](const Point2& p) { return half + p.x.get_d() * kScale; };
  auto sy = [&](const Point2& p) { return half - p.y.get_d() * kScale; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(2 * half) << "\" height=\"" << num(2 * half)
      << "\" data-scale=\"" << num(kScale) << "\" data-origin=\"" << num(half) << "," << num(half) << "\">\n";
  out << "  <!-- svg x = origin + scale * x, svg y = origin - scale * y -->\n";
  out << "  <polygon fill=\"#f4f4f4\" stroke=\"#bbbbbb\" points=\"";
  for (std::size_t k = 0; k < g.outer.size(); ++k) {
    out << (k ? " " : "") << num(sx(g.vertices[g.outer[k]])) << "," << num(sy(g.vertices[g.outer[k]]));
  }
  out << "\"/>\n";
  for (std::size_t w = 0; w < g.wires.size(); ++w) {
    out << "  <polyline fill=\"none\" stroke=\"steelblue\" points=\"";
    for (std::size_t k = 0; k < g.wires[w].size(); ++k) {
      const Point2& p = g.vertices[g.wires[w][k]];
      out << (k ? " " : "") << num(sx(p)) << "," << num(sy(p));
    }
    out << "\"/>\n";
    // the two rays through infinity, clipped
    const Point2& a = g.vertices[g.chords[w].first];
    const Point2& b = g.vertices[g.chords[w].second];
    const double dx = Rational(a.x - b.x).get_d(), dy = Rational(a.y - b.y).get_d();
    const double len = std::max(1e-9, std::sqrt(dx * dx + dy * dy));
    const double reach = 0.5 * kScale / len;
    out << "  <line stroke=\"steelblue\" stroke-dasharray=\"4 3\" x1=\"" << num(sx(a)) << "\" y1=\"" << num(sy(a))
        << "\" x2=\"" << num(sx(a) + dx * reach) << "\" y2=\"" << num(sy(a) - dy * reach) << "\"/>\n";
    out << "  <line stroke=\"steelblue\" stroke-dasharray=\"4 3\" x1=\"" << num(sx(b)) << "\" y1=\"" << num(sy(b))
        << "\" x2=\"" << num(sx(b) - dx * reach) << "\" y2=\"" << num(sy(b) + dy * reach) << "\"/>\n";
  }
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const Point2& p = g.vertices[i];
    if (d.event(i).designated()) {
      out << "  <circle cx=\"" << num(sx(p)) << "\" cy=\"" << num(sy(p)) << "\" r=\"5\" fill=\"black\"/>\n";
      out << "  <text x=\"" << num(sx(p) + 7) << "\" y=\"" << num(sy(p) - 7) << "\" font-size=\"10\">"
          << escape(*d.event(i).point) << "</text>\n";
    } else {
      out << "  <circle cx=\"" << num(sx(p)) << "\" cy=\"" << num(sy(p))
          << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace quasiline
