#include "quasiline/perm_sequence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "quasiline/error.hpp"

namespace quasiline {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{1});
  return p;
}

Permutation reverse_permutation(std::size_t n) {
  Permutation p = identity_permutation(n);
  std::reverse(p.begin(), p.end());
  return p;
}

const char* to_string(SequenceClass c) noexcept {
  switch (c) {
    case SequenceClass::Partial: return "Partial";
    case SequenceClass::Allowable: return "Allowable";
    case SequenceClass::GeneralizedAllowable: return "GeneralizedAllowable";
  }
  return "?";
}

PermSequence::PermSequence(std::size_t n, std::vector<Move> moves, std::vector<std::size_t> designated)
    : n_(n), moves_(std::move(moves)), designated_(std::move(designated)) {
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    const Move& m = moves_[i];
    if (m.start < 1 || m.length < 2 || m.last() > n_) {
      throw Error(ErrorKind::InvalidMove, "move " + std::to_string(i + 1) + " = (" + std::to_string(m.start) + "," +
                                              std::to_string(m.length) + ") is not a window of length >= 2 in 1.." +
                                              std::to_string(n_));
    }
  }
  std::sort(designated_.begin(), designated_.end());
  designated_.erase(std::unique(designated_.begin(), designated_.end()), designated_.end());
  for (std::size_t d : designated_) {
    if (d < 1 || d > moves_.size()) {
      throw Error(ErrorKind::IndexOutOfRange, "designated move " + std::to_string(d) + " outside 1.." +
                                                  std::to_string(moves_.size()));
    }
  }
}

const Move& PermSequence::move(std::size_t i) const {
  if (i < 1 || i > moves_.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "move index " + std::to_string(i) + " outside 1.." +
                                                std::to_string(moves_.size()));
  }
  return moves_[i - 1];
}

bool PermSequence::is_designated(std::size_t i) const {
  return std::binary_search(designated_.begin(), designated_.end(), i);
}

namespace {

void apply(Permutation& p, const Move& m) {
  std::reverse(p.begin() + static_cast<std::ptrdiff_t>(m.start - 1), p.begin() + static_cast<std::ptrdiff_t>(m.last()));
}

}  // namespace

Permutation permutation_after(const PermSequence& seq, std::size_t t) {
  if (t > seq.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "t = " + std::to_string(t) + " exceeds " + std::to_string(seq.size()));
  }
  Permutation p = identity_permutation(seq.n());
  for (std::size_t i = 0; i < t; ++i) apply(p, seq.moves()[i]);
  return p;
}

std::vector<Permutation> all_permutations(const PermSequence& seq) {
  std::vector<Permutation> out;
  out.reserve(seq.size() + 1);
  out.push_back(identity_permutation(seq.n()));
  for (const Move& m : seq.moves()) {
    out.push_back(out.back());
    apply(out.back(), m);
  }
  return out;
}

std::vector<std::size_t> move_window(const PermSequence& seq, std::size_t i) {
  const Move& m = seq.move(i);
  Permutation p = permutation_after(seq, i - 1);
  return {p.begin() + static_cast<std::ptrdiff_t>(m.start - 1), p.begin() + static_cast<std::ptrdiff_t>(m.last())};
}

std::vector<std::size_t> move_elements(const PermSequence& seq, std::size_t i) {
  auto w = move_window(seq, i);
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<std::vector<std::size_t>> pair_move_counts(const PermSequence& seq) {
  const std::size_t n = seq.n();
  std::vector<std::vector<std::size_t>> counts(n, std::vector<std::size_t>(n, 0));
  Permutation p = identity_permutation(n);
  for (const Move& m : seq.moves()) {
    for (std::size_t a = m.start - 1; a < m.last(); ++a) {
      for (std::size_t b = a + 1; b < m.last(); ++b) {
        ++counts[p[a] - 1][p[b] - 1];
        ++counts[p[b] - 1][p[a] - 1];
      }
    }
    apply(p, m);
  }
  return counts;
}

std::size_t pair_move_count(const PermSequence& seq, std::size_t x, std::size_t y) {
  if (x < 1 || y < 1 || x > seq.n() || y > seq.n() || x == y) {
    throw Error(ErrorKind::BadElement, "need distinct elements in 1.." + std::to_string(seq.n()) + ", got " +
                                           std::to_string(x) + " and " + std::to_string(y));
  }
  std::size_t count = 0;
  Permutation p = identity_permutation(seq.n());
  for (const Move& m : seq.moves()) {
    bool hx = false, hy = false;
    for (std::size_t a = m.start - 1; a < m.last(); ++a) {
      hx = hx || p[a] == x;
      hy = hy || p[a] == y;
    }
    if (hx && hy) ++count;
    apply(p, m);
  }
  return count;
}

SequenceClass classify(const PermSequence& seq) {
  auto counts = pair_move_counts(seq);
  bool all_one = true;
  for (std::size_t x = 0; x < seq.n(); ++x) {
    for (std::size_t y = x + 1; y < seq.n(); ++y) all_one = all_one && counts[x][y] == 1;
  }
  if (all_one) return SequenceClass::Allowable;
  if (permutation_after(seq, seq.size()) == reverse_permutation(seq.n())) return SequenceClass::GeneralizedAllowable;
  return SequenceClass::Partial;
}

PermSequence elementary_swap(const PermSequence& seq, std::size_t i) {
  if (i < 1 || i + 1 > seq.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "swap index " + std::to_string(i) + " needs moves i and i+1 in 1.." +
                                                std::to_string(seq.size()));
  }
  auto moves = seq.moves();
  if (moves[i - 1].overlaps(moves[i])) {
    throw Error(ErrorKind::NotDisjoint, "moves " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                            " share positions");
  }
  std::swap(moves[i - 1], moves[i]);
  std::vector<std::size_t> designated;
  for (std::size_t d : seq.designated()) {
    if (d == i) designated.push_back(i + 1);
    else if (d == i + 1) designated.push_back(i);
    else designated.push_back(d);
  }
  return PermSequence(seq.n(), std::move(moves), std::move(designated));
}

std::vector<std::vector<std::size_t>> move_element_multiset(const PermSequence& seq) {
  std::vector<std::vector<std::size_t>> sets;
  Permutation p = identity_permutation(seq.n());
  for (const Move& m : seq.moves()) {
    std::vector<std::size_t> w(p.begin() + static_cast<std::ptrdiff_t>(m.start - 1),
                               p.begin() + static_cast<std::ptrdiff_t>(m.last()));
    std::sort(w.begin(), w.end());
    sets.push_back(std::move(w));
    apply(p, m);
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

std::optional<std::vector<std::size_t>> is_equivalent_bounded(const PermSequence& a, const PermSequence& b,
                                                              std::size_t budget) {
  if (a == b) return std::vector<std::size_t>{};
  if (a.n() != b.n() || a.size() != b.size() || a.designated().size() != b.designated().size()) return std::nullopt;
  if (move_element_multiset(a) != move_element_multiset(b)) return std::nullopt;

  // Sequences are keyed by (moves, designated flags); parent links rebuild the chain.
  using Key = std::pair<std::vector<std::pair<std::size_t, std::size_t>>, std::vector<std::size_t>>;
  auto key_of = [](const PermSequence& s) {
    Key k;
    for (const Move& m : s.moves()) k.first.emplace_back(m.start, m.length);
    k.second = s.designated();
    return k;
  };
  std::map<Key, std::pair<Key, std::size_t>> parent;
  const Key start = key_of(a);
  const Key goal = key_of(b);
  parent.emplace(start, std::make_pair(start, 0));
  std::deque<PermSequence> queue{a};
  std::size_t expanded = 0;
  while (!queue.empty() && expanded < budget) {
    PermSequence cur = std::move(queue.front());
    queue.pop_front();
    ++expanded;
    const Key ck = key_of(cur);
    for (std::size_t i = 1; i < cur.size(); ++i) {
      if (cur.moves()[i - 1].overlaps(cur.moves()[i])) continue;
      PermSequence next = elementary_swap(cur, i);
      Key nk = key_of(next);
      if (parent.contains(nk)) continue;
      parent.emplace(nk, std::make_pair(ck, i));
      if (nk == goal) {
        std::vector<std::size_t> chain;
        for (Key k = nk; k != start;) {
          const auto& [pk, step] = parent.at(k);
          chain.push_back(step);
          k = pk;
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
      }
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace quasiline
