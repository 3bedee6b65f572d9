#include <queue>
#include <random>
#include <set>
#include <unordered_set>

#include "doctest.h"
#include "oracle.hpp"
#include "shardorder/error.hpp"
#include "shardorder/preorder.hpp"

using namespace shardorder;

namespace {

std::vector<std::vector<int>> members(const std::vector<Block>& blocks) {
  std::vector<std::vector<int>> out;
  for (const Block& b : blocks) out.push_back(b.members);
  return out;
}

// x_1 = x_4, x_6 = x_7, x_1 <= x_2, x_3 <= x_1 on [7].
Preorder seven_element_example() {
  const std::vector<std::pair<int, int>> pairs{{1, 4}, {4, 1}, {6, 7}, {7, 6}, {1, 2}, {3, 1}};
  return Preorder::closure_of(7, pairs);
}

}  // namespace

TEST_CASE("closure and basic relation queries") {
  const Preorder q = seven_element_example();
  CHECK(q.leq(3, 2));
  CHECK(q.leq(3, 4));
  CHECK(q.equivalent(1, 4));
  CHECK_FALSE(q.comparable(5, 6));
  CHECK(q.block_count() == 5);

  Preorder r = Preorder::discrete(4);
  r.relate(1, 2);
  r.relate(2, 3);
  CHECK(r.leq(1, 3));
  r.relate(3, 1);
  CHECK(r.equivalent(1, 2));
  CHECK(r.block_count() == 2);
  CHECK(Preorder::complete(5).block_count() == 1);
}

TEST_CASE("relations agree with the matrix oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 7;
    const oracle::Matrix m = oracle::random_preorder(n, rng, 0.15);
    const Preorder q = oracle::from_matrix(m);
    CHECK(oracle::to_matrix(q) == m);
    const oracle::Matrix m2 = oracle::random_preorder(n, rng, 0.1);
    oracle::Matrix both = m;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (m2[a][b]) both[a][b] = true;
    oracle::close(both);
    CHECK(oracle::to_matrix(q.closed_union(oracle::from_matrix(m2))) == both);
    CHECK(q.is_subrelation_of(oracle::from_matrix(m2)) == oracle::subset(m, m2));
    CHECK(q.block_count() == static_cast<int>(oracle::blocks(m).members.size()));
  }
}

TEST_CASE("blocks of the seven-element example") {
  const Preorder q = seven_element_example();
  CHECK(members(q.blocks()) == std::vector<std::vector<int>>{{1, 4}, {2}, {3}, {5}, {6, 7}});
  CHECK(q.blocks()[0].to_string() == "B[1,4]{1,4}");

  const BlockOrder order(q);
  const int b14 = order.block_of(1), b2 = order.block_of(2), b3 = order.block_of(3);
  CHECK(order.precedes(b3, b14));
  CHECK(order.precedes(b14, b2));
  CHECK(order.precedes(b3, b2));
  CHECK(order.covered_by(b3, b14));
  CHECK_FALSE(order.covered_by(b3, b2));
  CHECK_FALSE(order.comparable(order.block_of(5), order.block_of(6)));
  CHECK(is_permutation_preorder(q));
}

TEST_CASE("discrete pre-order is an antichain of singletons") {
  const Preorder q = Preorder::discrete(5);
  CHECK(q.blocks().size() == 5);
  const BlockOrder order(q);
  CHECK(order.cover_pairs().empty());
  CHECK(is_permutation_preorder(q));
}

TEST_CASE("axiom violations are reported with their blocks") {
  // {1,3} and {2,4} incomparable but overlapping.
  const std::vector<std::pair<int, int>> p1{{1, 3}, {3, 1}, {2, 4}, {4, 2}};
  auto v = find_axiom_violation(Preorder::closure_of(4, p1));
  REQUIRE(v.has_value());
  CHECK(v->axiom == Axiom::kOverlapComparable);
  CHECK(v->first.members == std::vector<int>{1, 3});
  CHECK(v->second.members == std::vector<int>{2, 4});
  CHECK_THROWS_AS(PermutationPreorder(Preorder::closure_of(4, p1)), Error);

  // {1,2} < {5,6} with nothing between.
  const std::vector<std::pair<int, int>> p2{{1, 2}, {2, 1}, {5, 6}, {6, 5}, {1, 5}};
  v = find_axiom_violation(Preorder::closure_of(6, p2));
  REQUIRE(v.has_value());
  CHECK(v->axiom == Axiom::kCoverOverlaps);
  CHECK_FALSE(v->describe().empty());
}

TEST_CASE("mu of the eight-element example") {
  const PermutationPreorder w = mu(Permutation::parse("26314758"));
  CHECK(members(w.blocks()) == std::vector<std::vector<int>>{{1, 3, 6}, {2}, {4}, {5, 7}, {8}});
  const BlockOrder order(w.relation());
  auto b = [&](int v) { return order.block_of(v); };
  CHECK(order.covered_by(b(2), b(1)));
  CHECK(order.covered_by(b(1), b(4)));
  CHECK(order.covered_by(b(1), b(5)));
  CHECK_FALSE(order.comparable(b(4), b(5)));
  CHECK_FALSE(order.comparable(b(8), b(1)));
  CHECK(order.cover_pairs().size() == 3);
}

TEST_CASE("mu of the extremes") {
  CHECK(mu(Permutation::identity(6)) == PermutationPreorder::bottom(6));
  CHECK(mu(Permutation::reversal(6)) == PermutationPreorder::top(6));
  CHECK(lambda(PermutationPreorder::bottom(6)) == Permutation::identity(6));
  CHECK(lambda(PermutationPreorder::top(6)) == Permutation::reversal(6));
}

TEST_CASE("mu matches the definition and lambda inverts it") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& word : oracle::all_words(n)) {
      const Permutation p = oracle::perm(word);
      const PermutationPreorder w = mu(p);
      CHECK(oracle::to_matrix(w.relation()) == oracle::mu(word));
      CHECK(lambda(w) == p);
      std::set<std::vector<int>> runs;
      for (const auto& r : oracle::runs(word)) {
        std::vector<int> sorted(r.rbegin(), r.rend());
        runs.insert(sorted);
      }
      const auto bs = members(w.blocks());
      CHECK(std::set<std::vector<int>>(bs.begin(), bs.end()) == runs);
    }
  }
  CHECK(lambda(mu(Permutation::parse("4312"))) == Permutation::parse("4312"));
}

TEST_CASE("the axioms carve out exactly the image of mu") {
  for (int n = 1; n <= 4; ++n) {
    std::set<oracle::Matrix> image;
    for (const auto& w : oracle::all_words(n)) image.insert(oracle::mu(w));
    std::size_t valid = 0;
    for (const oracle::Matrix& m : oracle::all_preorders(n)) {
      const bool in_image = image.count(m) > 0;
      const Preorder q = oracle::from_matrix(m);
      CHECK(is_permutation_preorder(q) == in_image);
      CHECK(oracle::is_permutation_preorder(m) == in_image);
      valid += in_image;
    }
    CHECK(valid == image.size());
  }

  std::set<oracle::Matrix> image5;
  for (const auto& w : oracle::all_words(5)) image5.insert(oracle::mu(w));
  std::mt19937 rng(11);
  std::size_t hits = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const oracle::Matrix m = oracle::random_preorder(5, rng, trial % 2 ? 0.12 : 0.25);
    const bool in_image = image5.count(m) > 0;
    hits += in_image;
    CHECK(is_permutation_preorder(oracle::from_matrix(m)) == in_image);
  }
  CHECK(hits > 0);
}

TEST_CASE("the nine-element example maps back to its word") {
  // Blocks {2} < {1,3}, and {7,9} < {4,8} < {5}, {6}.
  std::vector<std::pair<int, int>> pairs{{1, 3}, {3, 1}, {7, 9}, {9, 7}, {4, 8}, {8, 4},
                                         {2, 1}, {7, 4}, {4, 5}, {4, 6}};
  const PermutationPreorder w(Preorder::closure_of(9, pairs));
  CHECK(lambda(w) == Permutation::parse("231978456"));
  CHECK(mu(Permutation::parse("231978456")) == w);

  CHECK(members(blocks_by_placement(w)) ==
        std::vector<std::vector<int>>{{2}, {1, 3}, {7, 9}, {4, 8}, {5}, {6}});
}

TEST_CASE("placements") {
  const PermutationPreorder bottom = PermutationPreorder::bottom(5);
  CHECK(placements(bottom) == std::vector<int>{1, 2, 3, 4, 5});

  const PermutationPreorder w = mu(Permutation::parse("26314758"));
  // Blocks are listed by least member: {1,3,6}, {2}, {4}, {5,7}, {8}.
  CHECK(placements(w) == std::vector<int>{2, 1, 3, 4, 5});

  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      const PermutationPreorder v = mu(p);
      const auto pl = placements(v);
      const BlockOrder order(v.relation());
      std::vector<int> sorted = pl;
      std::sort(sorted.begin(), sorted.end());
      for (int k = 0; k < order.size(); ++k) CHECK(sorted[k] == k + 1);
      for (int x = 0; x < order.size(); ++x)
        for (int y = 0; y < order.size(); ++y)
          if (order.precedes(x, y)) CHECK(pl[x] < pl[y]);
    }
  }
}

TEST_CASE("inversions between disjoint runs are bridged by overlapping runs") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& word : oracle::all_words(n)) {
      const auto runs = oracle::runs(word);
      auto lo = [&](std::size_t r) { return runs[r].back(); };
      auto hi = [&](std::size_t r) { return runs[r].front(); };
      auto meets = [&](std::size_t r, int a, int b) { return lo(r) <= b && a <= hi(r); };
      for (std::size_t x = 0; x < runs.size(); ++x) {
        for (std::size_t y = x + 1; y < runs.size(); ++y) {
          if (lo(x) <= hi(y)) continue;  // overlapping, or not an inversion
          // Search runs strictly between x and y for a chain from [lo(x),hi(x)]
          // to [lo(y),hi(y)] with consecutive runs overlapping.
          std::vector<bool> seen(runs.size(), false);
          std::queue<std::size_t> todo;
          for (std::size_t d = x + 1; d < y; ++d) {
            if (meets(d, lo(x), hi(x))) {
              seen[d] = true;
              todo.push(d);
            }
          }
          bool reached = false;
          while (!todo.empty() && !reached) {
            const std::size_t d = todo.front();
            todo.pop();
            if (meets(d, lo(y), hi(y))) reached = true;
            for (std::size_t e = x + 1; e < y; ++e) {
              if (!seen[e] && meets(e, lo(d), hi(d))) {
                seen[e] = true;
                todo.push(e);
              }
            }
          }
          CAPTURE(oracle::perm(word).to_string());
          CHECK(reached);
          const BlockOrder order(mu(oracle::perm(word)).relation());
          CHECK(order.precedes(order.block_of(runs[x][0]), order.block_of(runs[y][0])));
        }
      }
    }
  }
}

TEST_CASE("mu is injective on S_5") {
  std::unordered_set<PermutationPreorder> seen;
  for (const Permutation& p : all_permutations(5)) seen.insert(mu(p));
  CHECK(seen.size() == 120);
}
