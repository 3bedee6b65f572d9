#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shardorder/permutation.hpp"

namespace shardorder {

/// An equivalence class of i ≡ j (i ⪯ j ⪯ i) inside a pre-order.
struct Block {
  std::vector<int> members;  // ascending
  std::uint32_t mask = 0;    // bit v-1 set for each member v
  int low = 0;
  int high = 0;

  bool contains(int value) const { return (mask >> (value - 1)) & 1U; }
  bool overlaps(const Block& other) const { return low <= other.high && other.low <= high; }
  /// "B[low,high]{members}"
  std::string to_string() const;

  friend bool operator==(const Block& a, const Block& b) { return a.mask == b.mask; }
};

/// A reflexive, transitively closed relation on [n], stored as one bitmask row
/// per element. Every mutator re-closes, so equality is equality of relations.
class Preorder {
 public:
  using Row = std::uint32_t;

  Preorder() = default;

  /// Equality only.
  static Preorder discrete(int n);
  /// Everything related to everything (one block).
  static Preorder complete(int n);
  /// Reflexive-transitive closure of the pairs a ⪯ b (1-based values).
  static Preorder closure_of(int n, std::span<const std::pair<int, int>> pairs);

  int size() const { return n_; }

  bool leq(int a, int b) const { return (rows_[idx(a)] >> (b - 1)) & 1U; }
  bool equivalent(int a, int b) const { return leq(a, b) && leq(b, a); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  std::span<const Row> rows() const { return std::span<const Row>(rows_.data(), idx(n_ + 1)); }

  /// Mask of every b with a ⪯ b.
  Row up_mask(int a) const { return rows_[idx(a)]; }
  /// Mask of every b with b ⪯ a.
  Row down_mask(int a) const;

  /// Adds a ⪯ b together with everything transitivity then demands.
  void relate(int a, int b);
  Preorder related(int a, int b) const {
    Preorder out = *this;
    out.relate(a, b);
    return out;
  }

  /// Transitive closure of the union of both relations.
  Preorder closed_union(const Preorder& other) const;

  /// Containment of relations: every a ⪯ b here also holds in `other`.
  bool is_subrelation_of(const Preorder& other) const;

  int block_count() const;
  /// Blocks sorted by their least member.
  std::vector<Block> blocks() const;

  /// All strict-or-equivalent pairs (a, b), a != b, with a ⪯ b.
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const Preorder&, const Preorder&) = default;
  friend auto operator<=>(const Preorder&, const Preorder&) = default;

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v - 1); }

  int n_ = 0;
  std::array<Row, kMaxN> rows_{};
};

/// The partial order a pre-order induces on its blocks.
class BlockOrder {
 public:
  explicit BlockOrder(const Preorder& q);

  int size() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(int index) const { return blocks_[static_cast<std::size_t>(index)]; }
  /// Index (into blocks()) of the block holding `value`.
  int block_of(int value) const { return block_of_[static_cast<std::size_t>(value - 1)]; }

  /// Strict block order x ≺ y.
  bool precedes(int x, int y) const { return (above_[static_cast<std::size_t>(x)] >> y) & 1U; }
  bool comparable(int x, int y) const { return precedes(x, y) || precedes(y, x); }
  /// x ⋖ y: x ≺ y with nothing strictly between.
  bool covered_by(int x, int y) const;

  std::uint32_t above_mask(int x) const { return above_[static_cast<std::size_t>(x)]; }
  std::uint32_t below_mask(int x) const { return below_[static_cast<std::size_t>(x)]; }

  std::vector<std::pair<int, int>> cover_pairs() const;

 private:
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
  std::vector<std::uint32_t> above_;
  std::vector<std::uint32_t> below_;
};

inline BlockOrder block_order(const Preorder& q) { return BlockOrder(q); }

enum class Axiom {
  kOverlapComparable,  // (P1)
  kCoverOverlaps,      // (P2)
};

struct AxiomViolation {
  Axiom axiom;
  Block first;
  Block second;
  std::string describe() const;
};

/// First violation of (P1) or (P2), scanning block pairs in order.
std::optional<AxiomViolation> find_axiom_violation(const Preorder& q);

inline bool is_permutation_preorder(const Preorder& q) {
  return !find_axiom_violation(q).has_value();
}

/// A pre-order known to satisfy (P1) and (P2): an element of the lattice.
class PermutationPreorder {
 public:
  /// Throws Error(kInvalidArgument) with the violation report if `q` fails
  /// either axiom.
  explicit PermutationPreorder(Preorder q);

  /// Skips validation. The caller must already know `q` is in the image of mu.
  static PermutationPreorder assume_valid(Preorder q);

  static PermutationPreorder bottom(int n);
  static PermutationPreorder top(int n);

  const Preorder& relation() const { return rel_; }
  int size() const { return rel_.size(); }
  int block_count() const { return rel_.block_count(); }
  std::vector<Block> blocks() const { return rel_.blocks(); }

  friend bool operator==(const PermutationPreorder&, const PermutationPreorder&) = default;
  friend auto operator<=>(const PermutationPreorder&, const PermutationPreorder&) = default;

 private:
  struct Unchecked {};
  PermutationPreorder(Unchecked, Preorder q) : rel_(std::move(q)) {}

  Preorder rel_;
};

PermutationPreorder mu(const Permutation& p);

/// Inverse of mu. Blocks become descending runs; comparable blocks follow the
/// order, incomparable ones follow their intervals on the line.
Permutation lambda(const PermutationPreorder& w);

/// Placement (1-based run position in lambda(w)) of each block, indexed like
/// w.blocks().
std::vector<int> placements(const PermutationPreorder& w);

/// w.blocks() reordered by placement.
std::vector<Block> blocks_by_placement(const PermutationPreorder& w);

}  // namespace shardorder

template <>
struct std::hash<shardorder::Preorder> {
  std::size_t operator()(const shardorder::Preorder& q) const noexcept;
};

template <>
struct std::hash<shardorder::PermutationPreorder> {
  std::size_t operator()(const shardorder::PermutationPreorder& w) const noexcept {
    return std::hash<shardorder::Preorder>{}(w.relation());
  }
};
