#include <functional>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "shardorder/error.hpp"
#include "shardorder/lattice.hpp"
#include "shardorder/sortable.hpp"

using namespace shardorder;

namespace {

// Crossing by brute force: a, b in one block and x, y in the other appearing
// around the cycle as a, x, b, y.
bool brute_crosses(const std::vector<int>& first, const std::vector<int>& second,
                   const std::vector<int>& cycle) {
  std::vector<int> pos(cycle.size() + 1);
  for (std::size_t k = 0; k < cycle.size(); ++k) pos[cycle[k]] = static_cast<int>(k);
  for (int a : first)
    for (int b : first)
      for (int x : second)
        for (int y : second) {
          const int pa = pos[a], pb = pos[b], px = pos[x], py = pos[y];
          if (pa < px && px < pb && pb < py) return true;
        }
  return false;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> current;
  std::function<void(int)> place = [&](int v) {
    if (v > n) {
      out.push_back(current);
      return;
    }
    for (std::size_t b = 0; b < current.size(); ++b) {
      current[b].push_back(v);
      place(v + 1);
      current[b].pop_back();
    }
    current.push_back({v});
    place(v + 1);
    current.pop_back();
  };
  place(1);
  return out;
}

unsigned long long catalan(int n) {
  const unsigned long long c[] = {1, 1, 2, 5, 14, 42, 132};
  return c[n];
}

}  // namespace

TEST_CASE("Coxeter words") {
  const CoxeterElement c = CoxeterElement::parse(9, "2,1,3,7,6,4,5,8");
  CHECK(c.to_string() == "2,1,3,7,6,4,5,8");
  CHECK(CoxeterElement::parse(9, "s2,s1,s3,s7,s6,s4,s5,s8") == c);
  CHECK(c.position(2) == 0);
  CHECK(c.position(8) == 7);
  CHECK_THROWS_AS(CoxeterElement::parse(4, "1,2"), Error);
  CHECK_THROWS_AS(CoxeterElement::parse(4, "1,1,3"), Error);
  CHECK_THROWS_AS(CoxeterElement::parse(4, "1,2,4"), Error);
  CHECK_THROWS_AS(CoxeterElement::parse(4, "1,x,3"), Error);
  CHECK(CoxeterElement::all(5).size() == 24);
  CHECK(CoxeterElement::parse(1, "").size() == 1);
}

TEST_CASE("barrings and cycles") {
  const CoxeterElement c = CoxeterElement::parse(9, "2,1,3,7,6,4,5,8");
  const Barring bars = barring_of(c);
  CHECK(bars.lower_values() == std::vector<int>{3, 4, 5, 8});
  CHECK(bars.upper_values() == std::vector<int>{2, 6, 7});
  CHECK(cycle_of(c) == std::vector<int>{1, 3, 4, 5, 8, 9, 7, 6, 2});

  for (int n = 3; n <= 7; ++n) {
    CHECK(barring_of(CoxeterElement::ascending(n)).upper_values().empty());
    CHECK(barring_of(CoxeterElement::descending(n)).lower_values().empty());
  }
  CHECK(cycle_of(CoxeterElement::ascending(3)) == std::vector<int>{1, 2, 3});
  CHECK(cycle_of(CoxeterElement::descending(4)) == std::vector<int>{1, 4, 3, 2});
}

TEST_CASE("c-sortable permutations") {
  const CoxeterElement c = CoxeterElement::parse(9, "2,1,3,7,6,4,5,8");
  CHECK_FALSE(is_c_sortable(Permutation::parse("163425897"), c));
  CHECK(is_c_sortable(Permutation::identity(9), c));
  for (const CoxeterElement& d : CoxeterElement::all(4)) CHECK(c_sortables(d).size() == 14);
  CHECK_THROWS_AS(is_c_sortable(Permutation::identity(3), c), Error);
}

TEST_CASE("noncrossing partitions agree with the interleaving definition") {
  for (int n = 1; n <= 6; ++n) {
    for (const CoxeterElement& c : CoxeterElement::all(n)) {
      const auto cycle = cycle_of(c);
      std::size_t count = 0;
      for (const auto& blocks : set_partitions(n)) {
        bool crossing = false;
        for (std::size_t a = 0; a < blocks.size(); ++a)
          for (std::size_t b = 0; b < blocks.size(); ++b)
            if (a != b && brute_crosses(blocks[a], blocks[b], cycle)) crossing = true;
        CHECK(is_noncrossing_partition(blocks, c) == !crossing);
        count += !crossing;
      }
      CHECK(count == catalan(n));
    }
  }
  CHECK_THROWS_AS(is_noncrossing_partition({{1, 2}, {2, 3}}, CoxeterElement::ascending(3)), Error);
  CHECK_THROWS_AS(is_noncrossing_partition({{1, 2}}, CoxeterElement::ascending(3)), Error);
}

TEST_CASE("noncrossing pre-orders are the images of sortables") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(is_noncrossing_preorder(PermutationPreorder::bottom(n), CoxeterElement::ascending(n)));
    for (const CoxeterElement& c : CoxeterElement::all(n)) {
      CHECK(is_noncrossing_preorder(PermutationPreorder::bottom(n), c));
      CHECK(is_noncrossing_preorder(PermutationPreorder::top(n), c));
      std::set<PermutationPreorder> sortable;
      for (const Permutation& p : c_sortables(c)) sortable.insert(mu(p));
      std::set<PermutationPreorder> nc;
      for (const Permutation& p : all_permutations(n)) {
        const auto w = mu(p);
        if (is_noncrossing_preorder(w, c)) nc.insert(w);
      }
      CHECK(sortable == nc);
      CHECK(sortable.size() == catalan(n));
    }
  }
}

TEST_CASE("orientation demands never conflict inside sortable images") {
  for (int n = 3; n <= 6; ++n) {
    for (const CoxeterElement& c : CoxeterElement::all(n)) {
      const Barring bars = barring_of(c);
      for (const Permutation& p : c_sortables(c)) {
        const BlockOrder order(mu(p).relation());
        for (int x = 0; x < order.size(); ++x)
          for (int y = x + 1; y < order.size(); ++y)
            if (order.block(x).overlaps(order.block(y)))
              CHECK(forced_orientation(order.block(x), order.block(y), bars) != Orientation::kConflict);
      }
    }
  }
}

TEST_CASE("orientation rule") {
  const Barring lower(5, {Bar::kLower, Bar::kLower, Bar::kLower});
  const Barring upper(5, {Bar::kUpper, Bar::kUpper, Bar::kUpper});
  const auto blocks = Preorder::closure_of(5, std::vector<std::pair<int, int>>{{1, 5}, {5, 1}}).blocks();
  // blocks: {1,5}, {2}, {3}, {4}
  CHECK(forced_orientation(blocks[0], blocks[2], lower) == Orientation::kSecondBelow);
  CHECK(forced_orientation(blocks[0], blocks[2], upper) == Orientation::kFirstBelow);
  CHECK(forced_orientation(blocks[2], blocks[0], lower) == Orientation::kFirstBelow);
  CHECK(forced_orientation(blocks[1], blocks[2], lower) == Orientation::kNone);

  // {1,4} and {2,5}: 2 sits inside [1,4] and 4 inside [2,5].
  const auto cross = Preorder::closure_of(
      5, std::vector<std::pair<int, int>>{{1, 4}, {4, 1}, {2, 5}, {5, 2}}).blocks();
  const Barring mixed(5, {Bar::kUpper, Bar::kLower, Bar::kLower});
  CHECK(forced_orientation(cross[0], cross[1], mixed) == Orientation::kFirstBelow);
  const Barring clash(5, {Bar::kUpper, Bar::kLower, Bar::kUpper});
  CHECK(forced_orientation(cross[0], cross[1], clash) == Orientation::kConflict);
}

TEST_CASE("noncrossing order of a partition") {
  for (int n = 1; n <= 6; ++n) {
    for (const CoxeterElement& c : CoxeterElement::all(n)) {
      std::set<PermutationPreorder> built;
      for (const auto& blocks : set_partitions(n)) {
        if (!is_noncrossing_partition(blocks, c)) {
          CHECK_THROWS_AS(noncrossing_order_of_partition(blocks, c), Error);
          continue;
        }
        const PermutationPreorder w = noncrossing_order_of_partition(blocks, c);
        CHECK(is_noncrossing_preorder(w, c));
        CHECK(w.block_count() == static_cast<int>(blocks.size()));
        for (const auto& b : blocks)
          for (int v : b) CHECK(w.relation().equivalent(b.front(), v));
        built.insert(w);
      }
      CHECK(built.size() == catalan(n));
    }
  }

  std::vector<std::vector<int>> singletons;
  for (int v = 1; v <= 5; ++v) singletons.push_back({v});
  CHECK(noncrossing_order_of_partition(singletons, CoxeterElement::ascending(5)) ==
        PermutationPreorder::bottom(5));

  // A noncrossing partition on the cycle 1,3,4,5,8,9,7,6,2.
  const CoxeterElement c = CoxeterElement::parse(9, "2,1,3,7,6,4,5,8");
  const std::vector<std::vector<int>> blocks{{1, 2, 9}, {3, 5}, {4}, {6, 7}, {8}};
  REQUIRE(is_noncrossing_partition(blocks, c));
  const PermutationPreorder w = noncrossing_order_of_partition(blocks, c);
  CHECK(is_noncrossing_preorder(w, c));
  CHECK(is_c_sortable(lambda(w), c));
  CHECK_THROWS_AS(noncrossing_order_of_partition({{1, 4}, {3, 5}, {2}, {6, 7, 8, 9}}, c), Error);
}

TEST_CASE("extreme Coxeter words order blocks by interval inclusion") {
  for (int n = 1; n <= 6; ++n) {
    for (int flip = 0; flip < 2; ++flip) {
      const CoxeterElement c = flip ? CoxeterElement::descending(n) : CoxeterElement::ascending(n);
      for (const Permutation& p : c_sortables(c)) {
        const BlockOrder order(mu(p).relation());
        for (int x = 0; x < order.size(); ++x) {
          for (int y = 0; y < order.size(); ++y) {
            if (x == y) continue;
            const Block& a = order.block(x);
            const Block& b = order.block(y);
            const bool inside = b.low <= a.low && a.high <= b.high;
            const bool outside = a.low <= b.low && b.high <= a.high;
            CHECK(order.precedes(x, y) == (flip ? outside : inside));
          }
        }
      }
    }
  }
}

TEST_CASE("noncrossing pre-orders form a sublattice") {
  for (int n = 1; n <= 5; ++n) {
    const OmegaLattice lat = OmegaLattice::build(n);
    for (const CoxeterElement& c : CoxeterElement::all(n)) {
      std::vector<std::size_t> nc;
      for (std::size_t i = 0; i < lat.size(); ++i)
        if (is_noncrossing_preorder(lat.element(i), c)) nc.push_back(i);
      for (std::size_t a : nc)
        for (std::size_t b : nc) {
          CHECK(is_noncrossing_preorder(lat.element(lat.join(a, b)), c));
          CHECK(is_noncrossing_preorder(lat.element(lat.meet(a, b)), c));
        }
    }
  }
}
