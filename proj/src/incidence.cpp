#include "quasiline/incidence.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "quasiline/error.hpp"

namespace quasiline {

namespace {

void index_labels(const std::vector<std::string>& labels, std::unordered_map<std::string, std::size_t>& lookup,
                  std::unordered_map<std::string, std::size_t>& other, const char* what) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& label = labels[i];
    if (label.empty()) throw Error(ErrorKind::DuplicateId, std::string("empty ") + what + " label");
    if (other.count(label) != 0) {
      throw Error(ErrorKind::DuplicateId, "label '" + label + "' used for both a point and a line");
    }
    if (!lookup.emplace(label, i).second) {
      throw Error(ErrorKind::DuplicateId, std::string("duplicate ") + what + " label '" + label + "'");
    }
  }
}

}  // namespace

IncidenceStructure IncidenceStructure::build(std::vector<std::string> points, std::vector<std::string> lines,
                                             const std::vector<std::pair<std::string, std::string>>& flags) {
  std::unordered_map<std::string, std::size_t> point_lookup;
  std::unordered_map<std::string, std::size_t> line_lookup;
  index_labels(points, point_lookup, line_lookup, "point");
  index_labels(lines, line_lookup, point_lookup, "line");

  std::vector<Flag> indexed;
  indexed.reserve(flags.size());
  for (const auto& [p, l] : flags) {
    auto pi = point_lookup.find(p);
    if (pi == point_lookup.end()) throw Error(ErrorKind::UnknownId, "flag references unknown point '" + p + "'");
    auto li = line_lookup.find(l);
    if (li == line_lookup.end()) throw Error(ErrorKind::UnknownId, "flag references unknown line '" + l + "'");
    indexed.push_back({pi->second, li->second});
  }
  return from_indices(std::move(points), std::move(lines), std::move(indexed));
}

IncidenceStructure IncidenceStructure::from_indices(std::vector<std::string> points, std::vector<std::string> lines,
                                                    std::vector<Flag> flags) {
  IncidenceStructure c;
  index_labels(points, c.point_lookup_, c.line_lookup_, "point");
  index_labels(lines, c.line_lookup_, c.point_lookup_, "line");
  c.point_labels_ = std::move(points);
  c.line_labels_ = std::move(lines);
  if (c.point_labels_.empty() || c.line_labels_.empty()) {
    throw Error(ErrorKind::DegreeTooLow, "an incidence structure needs points and lines");
  }

  for (const auto& f : flags) {
    if (f.point >= c.point_labels_.size() || f.line >= c.line_labels_.size()) {
      throw Error(ErrorKind::UnknownId, "flag index out of range");
    }
  }
  std::sort(flags.begin(), flags.end());
  flags.erase(std::unique(flags.begin(), flags.end()), flags.end());
  c.flags_ = std::move(flags);

  c.lines_of_.assign(c.point_labels_.size(), {});
  c.points_of_.assign(c.line_labels_.size(), {});
  for (const auto& f : c.flags_) {
    c.lines_of_[f.point].push_back(f.line);
    c.points_of_[f.line].push_back(f.point);
  }
  for (auto& v : c.points_of_) std::sort(v.begin(), v.end());

  for (std::size_t p = 0; p < c.lines_of_.size(); ++p) {
    if (c.lines_of_[p].size() < 2) {
      throw Error(ErrorKind::DegreeTooLow, "point '" + c.point_labels_[p] + "' lies on " +
                                               std::to_string(c.lines_of_[p].size()) + " line(s), needs 2");
    }
  }
  for (std::size_t l = 0; l < c.points_of_.size(); ++l) {
    if (c.points_of_[l].size() < 2) {
      throw Error(ErrorKind::DegreeTooLow, "line '" + c.line_labels_[l] + "' carries " +
                                               std::to_string(c.points_of_[l].size()) + " point(s), needs 2");
    }
  }
  return c;
}

std::optional<std::size_t> IncidenceStructure::point_index(std::string_view label) const {
  auto it = point_lookup_.find(std::string(label));
  if (it == point_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> IncidenceStructure::line_index(std::string_view label) const {
  auto it = line_lookup_.find(std::string(label));
  if (it == line_lookup_.end()) return std::nullopt;
  return it->second;
}

bool IncidenceStructure::incident(std::size_t p, std::size_t l) const {
  return std::binary_search(flags_.begin(), flags_.end(), Flag{p, l});
}

std::optional<std::size_t> girth(const LeviGraph& g) {
  std::optional<std::size_t> best;
  const std::size_t n = g.vertex_count();
  for (std::size_t root = 0; root < n; ++root) {
    std::vector<std::size_t> dist(n, SIZE_MAX), parent(n, SIZE_MAX);
    std::deque<std::size_t> q{root};
    dist[root] = 0;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop_front();
      for (std::size_t u : g.adjacency[v]) {
        if (dist[u] == SIZE_MAX) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          q.push_back(u);
        } else if (parent[v] != u) {
          std::size_t len = dist[u] + dist[v] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

LeviGraph levi_graph(const IncidenceStructure& c) {
  LeviGraph g;
  g.black_labels = c.point_labels();
  g.white_labels = c.line_labels();
  const std::size_t offset = c.point_count();
  g.adjacency.assign(c.point_count() + c.line_count(), {});
  for (const auto& f : c.flags()) {
    g.edges.emplace_back(f.point, offset + f.line);
    g.adjacency[f.point].push_back(offset + f.line);
    g.adjacency[offset + f.line].push_back(f.point);
  }
  return g;
}

IncidenceStructure from_levi_graph(const LeviGraph& g) {
  const std::size_t offset = g.black_labels.size();
  std::vector<Flag> flags;
  flags.reserve(g.edges.size());
  for (const auto& [b, w] : g.edges) {
    if (b >= offset || w < offset) throw Error(ErrorKind::UnknownId, "Levi edge does not join black to white");
    flags.push_back({b, w - offset});
  }
  return IncidenceStructure::from_indices(g.black_labels, g.white_labels, std::move(flags));
}

namespace {

// common[p][q] = number of lines through both p and q
std::vector<std::vector<std::size_t>> common_line_counts(const IncidenceStructure& c) {
  const std::size_t v = c.point_count();
  std::vector<std::vector<std::size_t>> common(v, std::vector<std::size_t>(v, 0));
  for (std::size_t l = 0; l < c.line_count(); ++l) {
    auto pts = c.points_of(l);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        ++common[pts[i]][pts[j]];
        ++common[pts[j]][pts[i]];
      }
    }
  }
  return common;
}

}  // namespace

bool is_lineal(const IncidenceStructure& c) {
  const auto common = common_line_counts(c);
  for (const auto& row : common) {
    for (auto count : row) {
      if (count >= 2) return false;
    }
  }
  return true;
}

std::optional<ConfigurationSignature> configuration_signature(const IncidenceStructure& c) {
  const std::size_t r = c.lines_of(0).size();
  const std::size_t k = c.points_of(0).size();
  for (std::size_t p = 0; p < c.point_count(); ++p) {
    if (c.lines_of(p).size() != r) return std::nullopt;
  }
  for (std::size_t l = 0; l < c.line_count(); ++l) {
    if (c.points_of(l).size() != k) return std::nullopt;
  }
  return ConfigurationSignature{c.point_count(), r, c.line_count(), k};
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const IncidenceStructure& a, const IncidenceStructure& b)
      : a_(a), b_(b), common_a_(common_line_counts(a)), common_b_(common_line_counts(b)) {
    point_inv_a_ = point_invariants(a_);
    point_inv_b_ = point_invariants(b_);
    for (std::size_t l = 0; l < b_.line_count(); ++l) {
      auto pts = b_.points_of(l);
      lines_by_set_b_[std::vector<std::size_t>(pts.begin(), pts.end())].push_back(l);
    }
    order_ = search_order();
  }

  std::optional<Isomorphism> run() {
    image_.assign(a_.point_count(), kUnset);
    used_.assign(b_.point_count(), false);
    if (!extend(0)) return std::nullopt;
    return result_;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // degree plus sorted degrees of incident lines
  static std::vector<std::vector<std::size_t>> point_invariants(const IncidenceStructure& c) {
    std::vector<std::vector<std::size_t>> inv(c.point_count());
    for (std::size_t p = 0; p < c.point_count(); ++p) {
      inv[p].push_back(c.lines_of(p).size());
      std::vector<std::size_t> line_degrees;
      for (auto l : c.lines_of(p)) line_degrees.push_back(c.points_of(l).size());
      std::sort(line_degrees.begin(), line_degrees.end());
      inv[p].insert(inv[p].end(), line_degrees.begin(), line_degrees.end());
    }
    return inv;
  }

  // Greedy order: next point is the one with most common lines to already-ordered points.
  std::vector<std::size_t> search_order() const {
    const std::size_t v = a_.point_count();
    std::vector<std::size_t> order;
    std::vector<bool> taken(v, false);
    std::vector<std::size_t> links(v, 0);
    for (std::size_t step = 0; step < v; ++step) {
      std::size_t best = kUnset;
      for (std::size_t p = 0; p < v; ++p) {
        if (taken[p]) continue;
        if (best == kUnset || links[p] > links[best] ||
            (links[p] == links[best] && a_.lines_of(p).size() > a_.lines_of(best).size())) {
          best = p;
        }
      }
      taken[best] = true;
      order.push_back(best);
      for (std::size_t q = 0; q < v; ++q) links[q] += common_a_[best][q];
    }
    return order;
  }

  bool consistent(std::size_t p, std::size_t image) const {
    if (point_inv_a_[p] != point_inv_b_[image]) return false;
    for (std::size_t q = 0; q < a_.point_count(); ++q) {
      if (image_[q] == kUnset) continue;
      if (common_a_[p][q] != common_b_[image][image_[q]]) return false;
    }
    // lines of p that are now fully mapped must land on some line of b
    for (auto l : a_.lines_of(p)) {
      std::vector<std::size_t> mapped;
      bool complete = true;
      for (auto q : a_.points_of(l)) {
        std::size_t img = (q == p) ? image : image_[q];
        if (img == kUnset) {
          complete = false;
          break;
        }
        mapped.push_back(img);
      }
      if (!complete) continue;
      std::sort(mapped.begin(), mapped.end());
      if (lines_by_set_b_.find(mapped) == lines_by_set_b_.end()) return false;
    }
    return true;
  }

  bool finish() {
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> lines_by_set_a;
    for (std::size_t l = 0; l < a_.line_count(); ++l) {
      std::vector<std::size_t> mapped;
      for (auto q : a_.points_of(l)) mapped.push_back(image_[q]);
      std::sort(mapped.begin(), mapped.end());
      lines_by_set_a[mapped].push_back(l);
    }
    Isomorphism iso;
    iso.point_map = image_;
    iso.line_map.assign(a_.line_count(), kUnset);
    for (const auto& [set, lines] : lines_by_set_a) {
      auto it = lines_by_set_b_.find(set);
      if (it == lines_by_set_b_.end() || it->second.size() != lines.size()) return false;
      for (std::size_t i = 0; i < lines.size(); ++i) iso.line_map[lines[i]] = it->second[i];
    }
    result_ = std::move(iso);
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return finish();
    const std::size_t p = order_[depth];
    for (std::size_t image = 0; image < b_.point_count(); ++image) {
      if (used_[image] || !consistent(p, image)) continue;
      image_[p] = image;
      used_[image] = true;
      if (extend(depth + 1)) return true;
      used_[image] = false;
      image_[p] = kUnset;
    }
    return false;
  }

  const IncidenceStructure& a_;
  const IncidenceStructure& b_;
  std::vector<std::vector<std::size_t>> common_a_;
  std::vector<std::vector<std::size_t>> common_b_;
  std::vector<std::vector<std::size_t>> point_inv_a_;
  std::vector<std::vector<std::size_t>> point_inv_b_;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> lines_by_set_b_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  Isomorphism result_;
};

template <typename Fn>
std::vector<std::size_t> sorted_degrees(std::size_t count, Fn degree) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(degree(i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<Isomorphism> are_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b) {
  if (a.point_count() != b.point_count() || a.line_count() != b.line_count() || a.flag_count() != b.flag_count()) {
    return std::nullopt;
  }
  auto pa = sorted_degrees(a.point_count(), [&](std::size_t p) { return a.lines_of(p).size(); });
  auto pb = sorted_degrees(b.point_count(), [&](std::size_t p) { return b.lines_of(p).size(); });
  auto la = sorted_degrees(a.line_count(), [&](std::size_t l) { return a.points_of(l).size(); });
  auto lb = sorted_degrees(b.line_count(), [&](std::size_t l) { return b.points_of(l).size(); });
  if (pa != pb || la != lb) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

namespace {

bool valid_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == '\'' ||
         c == '+' || c == '*';
}

}  // namespace

IncidenceStructure parse_lines_of_points(std::string_view text) {
  std::vector<std::string> points;
  std::unordered_map<std::string, std::size_t> point_lookup;
  std::vector<std::string> lines;
  std::vector<std::pair<std::string, std::string>> flags;

  std::size_t row = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    struct Token {
      std::string_view text;
      std::size_t column;
    };
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < raw.size();) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    ++row;
    std::string name = "L" + std::to_string(row);
    std::size_t first = 0;
    if (tokens[0].text.back() == ':') {
      name = std::string(tokens[0].text.substr(0, tokens[0].text.size() - 1));
      if (name.empty()) throw ParseError("empty line name", line_no, tokens[0].column);
      for (std::size_t k = 0; k < name.size(); ++k) {
        if (!valid_label_char(name[k])) {
          throw ParseError("invalid character in line name", line_no, tokens[0].column + k);
        }
      }
      first = 1;
    }
    if (tokens.size() == first) throw ParseError("line '" + name + "' lists no points", line_no, tokens[0].column);

    for (std::size_t t = first; t < tokens.size(); ++t) {
      for (std::size_t k = 0; k < tokens[t].text.size(); ++k) {
        char c = tokens[t].text[k];
        if (c == ':') throw ParseError("a line name must be the first token", line_no, tokens[t].column + k);
        if (!valid_label_char(c)) throw ParseError("invalid character in point label", line_no, tokens[t].column + k);
      }
      std::string label(tokens[t].text);
      if (point_lookup.emplace(label, points.size()).second) points.push_back(label);
      flags.emplace_back(label, name);
    }
    lines.push_back(std::move(name));
    if (end == text.size()) break;
  }
  if (lines.empty()) throw ParseError("no lines found", line_no, 1);
  return IncidenceStructure::build(std::move(points), std::move(lines), flags);
}

std::string format_lines_of_points(const IncidenceStructure& c) {
  std::string out;
  for (std::size_t l = 0; l < c.line_count(); ++l) {
    out += c.line_label(l);
    out += ':';
    for (auto p : c.points_of(l)) {
      out += ' ';
      out += c.point_label(p);
    }
    out += '\n';
  }
  return out;
}

}  // namespace quasiline
