#include "quasiline/realization.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "quasiline/error.hpp"

namespace quasiline {

namespace {

std::size_t inversion_distance(const Permutation& a, const Permutation& b) {
  std::vector<std::size_t> pos(a.size() + 1);
  for (std::size_t i = 0; i < b.size(); ++i) pos[b[i]] = i;
  std::size_t inv = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (pos[a[i]] > pos[a[j]]) ++inv;
    }
  }
  return inv;
}

struct Placement {
  Permutation target;
  std::size_t index;  // 0-based position of the block in target
  std::size_t cost;
};

// Pull the block out of cur and put it back contiguously, in block order,
// wherever that costs the fewest adjacent transpositions.
Placement best_placement(const Permutation& cur, const std::vector<std::size_t>& block) {
  Permutation rest;
  for (std::size_t x : cur) {
    if (std::find(block.begin(), block.end(), x) == block.end()) rest.push_back(x);
  }
  Placement best{{}, 0, std::numeric_limits<std::size_t>::max()};
  for (std::size_t at = 0; at <= rest.size(); ++at) {
    Permutation t(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(at));
    t.insert(t.end(), block.begin(), block.end());
    t.insert(t.end(), rest.begin() + static_cast<std::ptrdiff_t>(at), rest.end());
    std::size_t c = inversion_distance(cur, t);
    if (c < best.cost) best = {std::move(t), at, c};
  }
  return best;
}

void bridge(Permutation& cur, const Permutation& target, std::vector<Move>& moves) {
  for (std::size_t j = 0; j < target.size(); ++j) {
    std::size_t q = static_cast<std::size_t>(std::find(cur.begin(), cur.end(), target[j]) - cur.begin());
    while (q > j) {
      std::swap(cur[q - 1], cur[q]);
      moves.push_back({q, 2});
      --q;
    }
  }
}

std::vector<std::size_t> wires_of(const RealizationPlan& plan, std::size_t p) {
  std::vector<std::size_t> block;
  for (std::size_t l : plan.point_line_orders[p]) block.push_back(plan.line_numbering[l]);
  return block;
}

}  // namespace

RealizationPlan default_plan(const IncidenceStructure& c) {
  RealizationPlan plan;
  const std::size_t n = c.line_count();
  plan.line_numbering.resize(n);
  for (std::size_t l = 0; l < n; ++l) plan.line_numbering[l] = l + 1;
  for (std::size_t p = 0; p < c.point_count(); ++p) {
    auto ls = c.lines_of(p);
    plan.point_line_orders.emplace_back(ls.begin(), ls.end());
  }

  Permutation cur = identity_permutation(n);
  std::vector<bool> used(c.point_count(), false);
  for (std::size_t step = 0; step < c.point_count(); ++step) {
    std::size_t pick = 0, pick_cost = std::numeric_limits<std::size_t>::max();
    Placement pick_place;
    for (std::size_t p = 0; p < c.point_count(); ++p) {
      if (used[p]) continue;
      Placement pl = best_placement(cur, wires_of(plan, p));
      if (pl.cost < pick_cost) {
        pick = p;
        pick_cost = pl.cost;
        pick_place = std::move(pl);
      }
    }
    used[pick] = true;
    plan.point_order.push_back(pick);
    cur = std::move(pick_place.target);
    auto first = cur.begin() + static_cast<std::ptrdiff_t>(pick_place.index);
    std::reverse(first, first + static_cast<std::ptrdiff_t>(c.lines_of(pick).size()));
  }
  return plan;
}

void check_plan(const IncidenceStructure& c, const RealizationPlan& plan) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::PlanMismatch, why); };
  const std::size_t n = c.line_count();
  if (plan.line_numbering.size() != n) fail("line numbering has wrong size");
  std::vector<bool> seen(n + 1, false);
  for (std::size_t w : plan.line_numbering) {
    if (w < 1 || w > n || seen[w]) fail("line numbering is not a bijection onto 1.." + std::to_string(n));
    seen[w] = true;
  }
  if (plan.point_order.size() != c.point_count()) fail("point order does not list every point once");
  std::vector<bool> placed(c.point_count(), false);
  for (std::size_t p : plan.point_order) {
    if (p >= c.point_count() || placed[p]) fail("point order does not list every point once");
    placed[p] = true;
  }
  if (plan.point_line_orders.size() != c.point_count()) fail("line orders missing for some points");
  for (std::size_t p = 0; p < c.point_count(); ++p) {
    auto got = plan.point_line_orders[p];
    std::sort(got.begin(), got.end());
    auto want = c.lines_of(p);
    if (!std::equal(got.begin(), got.end(), want.begin(), want.end())) {
      fail("line order at point " + c.point_label(p) + " is not a permutation of its lines");
    }
  }
}

Realization realize(const IncidenceStructure& c, const RealizationPlan& plan) {
  check_plan(c, plan);
  const std::size_t n = c.line_count();
  Permutation cur = identity_permutation(n);
  std::vector<Move> moves;
  std::vector<std::size_t> designated;
  std::map<std::size_t, std::string> point_of_move;
  for (std::size_t p : plan.point_order) {
    auto block = wires_of(plan, p);
    Placement pl = best_placement(cur, block);
    bridge(cur, pl.target, moves);
    Move m{pl.index + 1, block.size()};
    std::reverse(cur.begin() + static_cast<std::ptrdiff_t>(pl.index),
                 cur.begin() + static_cast<std::ptrdiff_t>(pl.index + block.size()));
    moves.push_back(m);
    designated.push_back(moves.size());
    point_of_move[moves.size()] = c.point_label(p);
  }
  bridge(cur, reverse_permutation(n), moves);

  std::vector<std::string> wire_labels(n);
  for (std::size_t l = 0; l < n; ++l) wire_labels[plan.line_numbering[l] - 1] = c.line_label(l);
  return {PermSequence(n, std::move(moves), std::move(designated)), std::move(point_of_move), std::move(wire_labels)};
}

std::size_t unwanted_crossing_count(const PermSequence& seq) {
  std::size_t total = 0;
  for (std::size_t i = 1; i <= seq.size(); ++i) {
    if (seq.is_designated(i)) continue;
    std::size_t k = seq.move(i).length;
    total += k * (k - 1) / 2;
  }
  return total;
}

std::size_t unwanted_crossing_count(const Realization& r) { return unwanted_crossing_count(r.seq); }

long long topological_unwanted_bound(std::size_t n, std::size_t k) {
  if (k < 2 || n < k) throw Error(ErrorKind::InvalidInput, "need n >= k >= 2");
  auto c2 = [](long long x) { return x * (x - 1) / 2; };
  return c2(static_cast<long long>(n)) - static_cast<long long>(n) * c2(static_cast<long long>(k));
}

}  // namespace quasiline
