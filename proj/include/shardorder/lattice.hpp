#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "shardorder/permutation.hpp"
#include "shardorder/preorder.hpp"

namespace shardorder {

/// Default upper bound on n for anything that materialises all of S_n.
inline constexpr int kDefaultLatticeCap = 7;

/// Containment of relations.
bool leq(const PermutationPreorder& a, const PermutationPreorder& b);

/// n minus the number of blocks.
inline int rank(const PermutationPreorder& w) { return w.size() - w.block_count(); }

/// Two blocks may be merged by a cover when they are incomparable or one
/// covers the other.
bool combinable(const BlockOrder& order, int x, int y);

/// Every cover of w, built by merging a combinable pair of blocks and then
/// orienting each newly overlapping incomparable block both ways. Candidates
/// that lose more than one block or break (P1)/(P2) are dropped. Sorted by
/// lambda word.
std::vector<PermutationPreorder> covers_up(const PermutationPreorder& w);

/// Closure of the union of both relations. Throws Error(kInternal) if the
/// closure leaves the lattice.
PermutationPreorder join(const PermutationPreorder& a, const PermutationPreorder& b);

/// Greatest common lower bound, found by scanning mu(S_n).
PermutationPreorder meet(const PermutationPreorder& a, const PermutationPreorder& b);

struct Interval {
  std::size_t bottom = 0;
  std::size_t top = 0;
  std::vector<std::size_t> members;                        // ascending element index
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // Hasse covers inside
};

/// (Ω, ≤_S) for a fixed n: every permutation pre-order, indexed by the
/// lexicographic rank of its lambda word, with ranks, the comparability
/// matrix, and the Hasse diagram. Immutable once built.
class OmegaLattice {
 public:
  /// Throws Error(kResource) if n exceeds `cap`.
  static OmegaLattice build(int n, int cap = kDefaultLatticeCap);

  int n() const { return n_; }
  std::size_t size() const { return elements_.size(); }

  const PermutationPreorder& element(std::size_t i) const { return elements_[i]; }
  /// lambda(element(i)), which is the i-th permutation in lex order.
  const Permutation& word(std::size_t i) const { return words_[i]; }

  std::size_t index_of(const PermutationPreorder& w) const;
  std::size_t index_of(const Permutation& p) const;

  int rank(std::size_t i) const { return ranks_[i]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  bool leq(std::size_t i, std::size_t j) const {
    return (leq_[i * words_per_row_ + j / 64] >> (j % 64)) & 1U;
  }

  std::span<const std::size_t> up(std::size_t i) const { return up_[i]; }
  std::span<const std::size_t> down(std::size_t i) const { return down_[i]; }
  std::size_t edge_count() const { return edge_count_; }

  std::size_t join(std::size_t i, std::size_t j) const;
  std::size_t meet(std::size_t i, std::size_t j) const;

  /// Throws Error(kDomain) unless leq(bottom, top).
  Interval interval(std::size_t bottom, std::size_t top) const;

 private:
  OmegaLattice() = default;

  int n_ = 0;
  std::vector<PermutationPreorder> elements_;
  std::vector<Permutation> words_;
  std::vector<int> ranks_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> leq_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::size_t edge_count_ = 0;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

}  // namespace shardorder
