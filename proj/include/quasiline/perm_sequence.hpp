#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace quasiline {

/// Reversal of `length` consecutive entries starting at 1-based position `start`.
struct Move {
  std::size_t start;
  std::size_t length;

  std::size_t last() const noexcept { return start + length - 1; }
  bool overlaps(const Move& other) const noexcept { return start <= other.last() && other.start <= last(); }

  friend bool operator==(const Move&, const Move&) = default;
};

/// One-line notation over {1..n}: entry j is the element at position j+1.
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t n);
Permutation reverse_permutation(std::size_t n);

enum class SequenceClass { Partial, Allowable, GeneralizedAllowable };

const char* to_string(SequenceClass c) noexcept;

/// A sequence of permutations pi_0 = id, pi_1, ..., pi_r where each pi_i is
/// obtained from pi_{i-1} by one window reversal. Only the moves are stored.
///
/// Move indices are 1-based throughout (move i produces pi_i). Moves of
/// length 1 are rejected. `designated` marks moves that stand for points of
/// an incidence structure.
class PermSequence {
 public:
  /// Throws Error(InvalidMove) for bad windows, Error(IndexOutOfRange) for
  /// designated indices outside 1..r.
  PermSequence(std::size_t n, std::vector<Move> moves, std::vector<std::size_t> designated = {});

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return moves_.size(); }
  const std::vector<Move>& moves() const noexcept { return moves_; }
  const Move& move(std::size_t i) const;
  /// Sorted, duplicate-free.
  const std::vector<std::size_t>& designated() const noexcept { return designated_; }
  bool is_designated(std::size_t i) const;

  friend bool operator==(const PermSequence&, const PermSequence&) = default;

 private:
  std::size_t n_;
  std::vector<Move> moves_;
  std::vector<std::size_t> designated_;
};

/// pi_t, i.e. the first t moves applied to the identity. 0 <= t <= r.
Permutation permutation_after(const PermSequence& seq, std::size_t t);

/// All of pi_0..pi_r.
std::vector<Permutation> all_permutations(const PermSequence& seq);

/// Elements in move i's window of pi_{i-1}, top to bottom (before reversal).
std::vector<std::size_t> move_window(const PermSequence& seq, std::size_t i);

/// Sorted element set reversed by move i.
std::vector<std::size_t> move_elements(const PermSequence& seq, std::size_t i);

SequenceClass classify(const PermSequence& seq);

/// Number of moves whose element set contains both x and y.
std::size_t pair_move_count(const PermSequence& seq, std::size_t x, std::size_t y);

/// counts[x-1][y-1] for all pairs in one pass.
std::vector<std::vector<std::size_t>> pair_move_counts(const PermSequence& seq);

/// Interchanges moves i and i+1, which must occupy disjoint position windows.
/// Designated flags travel with their moves.
PermSequence elementary_swap(const PermSequence& seq, std::size_t i);

/// Sorted multiset of move element sets; invariant under elementary swaps.
std::vector<std::vector<std::size_t>> move_element_multiset(const PermSequence& seq);

/// Breadth-first search for a chain of elementary swaps turning `a` into `b`.
/// Returns the swap indices in application order. nullopt means "not found
/// within `budget` expanded sequences"; it is a disproof only when the
/// element-set multisets or designated counts differ.
std::optional<std::vector<std::size_t>> is_equivalent_bounded(const PermSequence& a, const PermSequence& b,
                                                              std::size_t budget);

}  // namespace quasiline
