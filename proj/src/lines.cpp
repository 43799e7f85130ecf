#include "quasiline/lines.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "quasiline/error.hpp"

namespace quasiline {

namespace {

using Vec3 = std::array<Rational, 3>;

// homogeneous covector (a, b, -c)
Vec3 covector(const GeoLine& l) { return {l.a, l.b, Rational(-l.c)}; }

Rational det(const Chart& h) {
  return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
         h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

Chart adjugate(const Chart& h) {
  Chart a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a[i][j] = h[r0][c0] * h[r1][c1] - h[r0][c1] * h[r1][c0];
    }
  }
  return a;
}

Vec3 apply(const Chart& h, const Vec3& v) {
  Vec3 out;
  for (int i = 0; i < 3; ++i) out[i] = h[i][0] * v[0] + h[i][1] * v[1] + h[i][2] * v[2];
  return out;
}

// row vector times matrix
Vec3 apply_row(const Vec3& l, const Chart& m) {
  Vec3 out;
  for (int j = 0; j < 3; ++j) out[j] = l[0] * m[0][j] + l[1] * m[1][j] + l[2] * m[2][j];
  return out;
}

bool proportional(const Vec3& u, const Vec3& v) {
  return u[0] * v[1] == u[1] * v[0] && u[0] * v[2] == u[2] * v[0] && u[1] * v[2] == u[2] * v[1];
}

Chart make_chart(std::initializer_list<int> entries) {
  Chart h;
  auto it = entries.begin();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) h[i][j] = *it++;
  }
  return h;
}

std::vector<Chart> fixed_charts() {
  return {
      make_chart({1, 0, 0, 0, 1, 0, 0, 0, 1}),  make_chart({1, 1, 0, 0, 1, 0, 0, 0, 1}),
      make_chart({1, 0, 0, 0, 1, 0, 1, 2, 5}),  make_chart({2, 1, 0, 1, 3, 1, -1, 1, 7}),
      make_chart({1, 3, 2, -2, 1, 1, 3, -1, 11}),
  };
}

struct Sweep {
  std::vector<std::size_t> line_of_wire;
  std::vector<Event> events;
};

// nullopt if the chart is unusable
std::optional<Sweep> sweep_in_chart(const std::vector<Vec3>& lines, const std::vector<SelectedPoint>& points,
                                    const Chart& h) {
  const Chart adj = adjugate(h);
  std::vector<Vec3> img;
  for (const Vec3& l : lines) {
    Vec3 m = apply_row(l, adj);
    if (m[1] == 0) return std::nullopt;  // vertical or the line at infinity
    img.push_back(m);
  }
  // as y = slope*x + icept
  std::vector<Rational> slope, icept;
  for (const Vec3& m : img) {
    slope.push_back(-m[0] / m[1]);
    icept.push_back(-m[2] / m[1]);
  }
  std::map<std::pair<Rational, Rational>, std::vector<std::size_t>> meets;
  for (std::size_t i = 0; i < img.size(); ++i) {
    for (std::size_t j = i + 1; j < img.size(); ++j) {
      if (slope[i] == slope[j]) return std::nullopt;
      Rational x = (icept[j] - icept[i]) / (slope[i] - slope[j]);
      Rational y = slope[i] * x + icept[i];
      auto& ls = meets[{x, y}];
      for (std::size_t k : {i, j}) {
        if (std::find(ls.begin(), ls.end(), k) == ls.end()) ls.push_back(k);
      }
    }
  }
  // distinct crossings need distinct x
  std::optional<Rational> last_x;
  for (const auto& [pt, ls] : meets) {
    if (last_x && *last_x == pt.first) return std::nullopt;
    last_x = pt.first;
  }
  std::map<std::pair<Rational, Rational>, std::string> label_at;
  for (const SelectedPoint& p : points) {
    Vec3 q = apply(h, {p.at.x, p.at.y, Rational(1)});
    if (q[2] == 0) return std::nullopt;
    label_at[{q[0] / q[2], q[1] / q[2]}] = p.label;
  }

  Sweep out;
  out.line_of_wire.resize(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) out.line_of_wire[i] = i;
  std::stable_sort(out.line_of_wire.begin(), out.line_of_wire.end(),
                   [&](std::size_t a, std::size_t b) { return slope[a] < slope[b]; });
  std::vector<std::size_t> order = out.line_of_wire;  // current top-to-bottom lines
  for (const auto& [pt, ls] : meets) {
    std::vector<std::size_t> at;
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (std::find(ls.begin(), ls.end(), order[k]) != ls.end()) at.push_back(k);
    }
    if (at.back() - at.front() + 1 != at.size()) {
      throw Error(ErrorKind::InvalidInput, "internal: concurrent lines are not adjacent at their crossing");
    }
    std::reverse(order.begin() + static_cast<std::ptrdiff_t>(at.front()),
                 order.begin() + static_cast<std::ptrdiff_t>(at.back() + 1));
    Event e{at.front() + 1, at.size(), std::nullopt};
    if (auto it = label_at.find(pt); it != label_at.end()) e.point = it->second;
    out.events.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<std::pair<Point2, std::vector<std::size_t>>> intersection_points(const std::vector<GeoLine>& lines) {
  std::map<std::pair<Rational, Rational>, std::vector<std::size_t>> meets;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const GeoLine& p = lines[i];
      const GeoLine& q = lines[j];
      Rational den = p.a * q.b - p.b * q.a;
      if (den == 0) continue;
      Rational x = (p.c * q.b - p.b * q.c) / den;
      Rational y = (p.a * q.c - p.c * q.a) / den;
      auto& ls = meets[{x, y}];
      for (std::size_t k : {i, j}) {
        if (std::find(ls.begin(), ls.end(), k) == ls.end()) ls.push_back(k);
      }
    }
  }
  std::vector<std::pair<Point2, std::vector<std::size_t>>> out;
  for (auto& [pt, ls] : meets) {
    std::sort(ls.begin(), ls.end());
    out.push_back({Point2{pt.first, pt.second}, ls});
  }
  return out;
}

LinesDiagram diagram_from_lines(const std::vector<GeoLine>& lines, const std::vector<SelectedPoint>& points,
                                std::uint64_t seed) {
  std::vector<Vec3> cov;
  for (const GeoLine& l : lines) {
    if (l.a == 0 && l.b == 0) throw Error(ErrorKind::InvalidInput, "line " + l.label + " has a = b = 0");
    cov.push_back(covector(l));
  }
  for (std::size_t i = 0; i < cov.size(); ++i) {
    for (std::size_t j = i + 1; j < cov.size(); ++j) {
      if (proportional(cov[i], cov[j])) {
        throw Error(ErrorKind::DuplicateLine, "lines " + lines[i].label + " and " + lines[j].label + " coincide");
      }
    }
  }
  for (const SelectedPoint& p : points) {
    std::size_t on = 0;
    for (const GeoLine& l : lines) on += (l.a * p.at.x + l.b * p.at.y == l.c) ? 1 : 0;
    if (on < 2) throw Error(ErrorKind::InvalidInput, "selected point " + p.label + " lies on fewer than two lines");
  }

  std::vector<std::string> wire_labels;
  auto finish = [&](Sweep s, const Chart& h, std::size_t attempts) {
    for (std::size_t l : s.line_of_wire) wire_labels.push_back(lines[l].label);
    return LinesDiagram{WiringDiagram(lines.size(), std::move(s.events), wire_labels), std::move(s.line_of_wire), h,
                        attempts};
  };

  std::size_t attempts = 0;
  for (const Chart& h : fixed_charts()) {
    if (auto s = sweep_in_chart(cov, points, h)) return finish(std::move(*s), h, attempts);
    ++attempts;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int tries = 0; tries < 400; ++tries) {
    Chart h;
    for (auto& row : h) {
      for (auto& x : row) x = entry(rng);
    }
    if (det(h) == 0) continue;
    if (auto s = sweep_in_chart(cov, points, h)) return finish(std::move(*s), h, attempts);
    ++attempts;
  }
  throw Error(ErrorKind::UnresolvableChart, "no chart puts every crossing at a distinct finite x");
}

}  // namespace quasiline
