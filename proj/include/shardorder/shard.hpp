#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shardorder/permutation.hpp"
#include "shardorder/preorder.hpp"

namespace shardorder {

/// A shard of the hyperplane x_i = x_j in the braid arrangement, recorded by
/// its sign pattern: signs[k - i - 1] = +1 means x_i <= x_k, -1 means
/// x_k <= x_i, for each i < k < j.
struct Shard {
  int i = 0;
  int j = 0;
  std::vector<int> signs;

  int sign(int k) const { return signs[static_cast<std::size_t>(k - i - 1)]; }

  /// "H(i,j)[+-...]"; signs listed for k = i+1 .. j-1.
  std::string to_string() const;
  static Shard parse(std::string_view text);

  friend bool operator==(const Shard&, const Shard&) = default;
  friend auto operator<=>(const Shard&, const Shard&) = default;
};

/// Every shard of the arrangement for S_n: 2^(j-i-1) per hyperplane H_ij,
/// ordered by (i, j) and then by sign pattern with '+' first.
std::vector<Shard> enumerate_shards(int n);

/// Closed form of the shard count, sum over i<j of 2^(j-i-1).
unsigned long long shard_count(int n);

/// One shard per descent j i of p, in H_ij, with x_k <= x_i exactly when
/// (k, i) is an inversion of p.
std::vector<Shard> lower_shards(const Permutation& p);

/// A cone cut out by equalities x_a = x_b and inequalities x_a <= x_b,
/// stored closed under the consequences those constraints imply.
class ShardIntersection {
 public:
  /// The whole space.
  explicit ShardIntersection(int n);

  int size() const { return closed_.size(); }

  void add_equality(int a, int b);
  void add_inequality(int a, int b);  // x_a <= x_b

  bool implies_leq(int a, int b) const { return closed_.leq(a, b); }

  /// Unordered pairs {a, b}, a < b, with x_a = x_b.
  std::vector<std::pair<int, int>> equalities() const;
  /// Ordered pairs (a, b) with x_a <= x_b but not x_a = x_b.
  std::vector<std::pair<int, int>> inequalities() const;

  const Preorder& closed_relation() const { return closed_; }

  friend bool operator==(const ShardIntersection&, const ShardIntersection&) = default;

 private:
  Preorder closed_;
};

/// Union of the defining constraints of every shard. The empty list is the
/// whole space.
ShardIntersection intersect(int n, std::span<const Shard> shards);

/// i ⪯ j exactly when x_i <= x_j holds on the cone.
Preorder to_preorder(const ShardIntersection& g);

}  // namespace shardorder
