#include <functional>

#include "doctest.h"
#include "oracle.hpp"
#include "shardorder/error.hpp"
#include "shardorder/shelling.hpp"

using namespace shardorder;

namespace {

// Label of a cover computed from the words alone: the runs of the lower word
// are its blocks in placement order, and the label is the larger position of
// the two runs that end up together above.
int oracle_label(const std::vector<int>& lower_word, const oracle::Matrix& upper) {
  const auto runs = oracle::runs(lower_word);
  int label = 0;
  for (std::size_t x = 0; x < runs.size(); ++x)
    for (std::size_t y = x + 1; y < runs.size(); ++y)
      if (upper[runs[x][0] - 1][runs[y][0] - 1] && upper[runs[y][0] - 1][runs[x][0] - 1])
        label = std::max(label, static_cast<int>(y) + 1);
  return label;
}

struct BruteChains {
  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::vector<int>> labels;
};

BruteChains brute_chains(const oracle::Poset& poset, const std::vector<std::vector<int>>& words,
                         std::size_t bottom, std::size_t top) {
  BruteChains out;
  std::vector<std::size_t> path{bottom};
  std::vector<int> labels;
  std::function<void(std::size_t)> walk = [&](std::size_t at) {
    if (at == top) {
      out.paths.push_back(path);
      out.labels.push_back(labels);
      return;
    }
    for (std::size_t next = 0; next < poset.size(); ++next) {
      if (!poset.covers(at, next) || !poset.leq[next][top]) continue;
      path.push_back(next);
      labels.push_back(oracle_label(words[at], poset.elements[next]));
      walk(next);
      path.pop_back();
      labels.pop_back();
    }
  };
  walk(bottom);
  return out;
}

long long brute_mobius(const oracle::Poset& poset, std::size_t bottom, std::size_t top) {
  std::vector<long long> mu(poset.size(), 0);
  // Process by number of elements below, which respects the order.
  std::vector<std::size_t> order;
  for (std::size_t z = 0; z < poset.size(); ++z)
    if (poset.leq[bottom][z] && poset.leq[z][top]) order.push_back(z);
  auto height = [&](std::size_t z) {
    return std::count_if(order.begin(), order.end(), [&](std::size_t u) { return poset.leq[u][z]; });
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return height(a) < height(b); });
  for (std::size_t z : order) {
    if (z == bottom) {
      mu[z] = 1;
      continue;
    }
    long long sum = 0;
    for (std::size_t u : order)
      if (u != z && poset.leq[u][z]) sum += mu[u];
    mu[z] = -sum;
  }
  return mu[top];
}

}  // namespace

TEST_CASE("edge labels") {
  const auto bottom = PermutationPreorder::bottom(5);
  for (const auto& atom : covers_up(bottom)) {
    int j = 0;
    for (const Block& b : atom.blocks())
      if (b.members.size() == 2) j = b.high;
    CHECK(edge_label(bottom, atom) == j);
  }
  CHECK_THROWS_AS(edge_label(bottom, PermutationPreorder::top(5)), Error);

  const OmegaLattice three = OmegaLattice::build(3);
  const EdgeLabeling sigma(three);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < three.size(); ++i) {
    for (std::size_t k = 0; k < three.up(i).size(); ++k) {
      const std::size_t j = three.up(i)[k];
      const int label = sigma.up_labels(i)[k];
      CHECK((label == 2 || label == 3));
      CHECK(label == sigma.label(i, j));
      std::vector<int> w(three.word(i).word().begin(), three.word(i).word().end());
      CHECK(label == oracle_label(w, oracle::to_matrix(three.element(j).relation())));
      ++edges;
    }
  }
  CHECK(edges == three.edge_count());
}

TEST_CASE("labels stay in range") {
  for (int n = 2; n <= 6; ++n) {
    const OmegaLattice lat = OmegaLattice::build(n);
    const EdgeLabeling sigma(lat);
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (int label : sigma.up_labels(i)) {
        CHECK(label >= 2);
        CHECK(label <= n - lat.rank(i));
      }
  }
}

TEST_CASE("combinable pairs") {
  const auto bottom = PermutationPreorder::bottom(5);
  CHECK(combinable_pairs(bottom, PermutationPreorder::top(5)).size() == 10);
  const auto w = mu(Permutation::parse("2413"));
  CHECK(combinable_pairs(w, w).empty());

  const auto pairs = combinable_pairs(PermutationPreorder::bottom(4), mu(Permutation::parse("3214")));
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].first.members == std::vector<int>{1});
  CHECK(pairs[0].second.members == std::vector<int>{2});
  CHECK(pairs[1].first.members == std::vector<int>{1});
  CHECK(pairs[1].second.members == std::vector<int>{3});
  CHECK(pairs[2].first.members == std::vector<int>{2});
  CHECK(pairs[2].second.members == std::vector<int>{3});

  CHECK_THROWS_AS(combinable_pairs(mu(Permutation::parse("2134")), mu(Permutation::parse("1243"))),
                  Error);
}

TEST_CASE("combinable pairs exist below every strictly larger element") {
  const OmegaLattice lat = OmegaLattice::build(4);
  for (std::size_t a = 0; a < lat.size(); ++a)
    for (std::size_t b = 0; b < lat.size(); ++b)
      if (a != b && lat.leq(a, b)) CHECK_FALSE(combinable_pairs(lat.element(a), lat.element(b)).empty());
}

TEST_CASE("greedy chain on the full S_4 interval") {
  const auto chain = increasing_chain(PermutationPreorder::bottom(4), PermutationPreorder::top(4));
  CHECK(chain.labels == std::vector<int>{2, 2, 2});
  REQUIRE(chain.elements.size() == 4);
  CHECK(lambda(chain.elements[1]) == Permutation::parse("2134"));
  CHECK(lambda(chain.elements[2]) == Permutation::parse("3214"));
  CHECK(chain.elements[3] == PermutationPreorder::top(4));

  const auto w = mu(Permutation::parse("3142"));
  const auto trivial = increasing_chain(w, w);
  CHECK(trivial.elements.size() == 1);
  CHECK(trivial.labels.empty());
}

TEST_CASE("EL property against brute-force chains") {
  for (int n = 1; n <= 4; ++n) {
    const OmegaLattice lat = OmegaLattice::build(n);
    const EdgeLabeling sigma(lat);
    std::vector<oracle::Matrix> els;
    const auto words = oracle::all_words(n);
    for (const auto& w : words) els.push_back(oracle::mu(w));
    const oracle::Poset poset(els);
    for (std::size_t b = 0; b < lat.size(); ++b) {
      for (std::size_t t = 0; t < lat.size(); ++t) {
        if (!poset.leq[b][t]) continue;
        const BruteChains chains = brute_chains(poset, words, b, t);
        std::size_t increasing = 0;
        std::size_t decreasing = 0;
        std::size_t inc_at = 0;
        for (std::size_t k = 0; k < chains.labels.size(); ++k) {
          const auto& l = chains.labels[k];
          if (std::is_sorted(l.begin(), l.end())) {
            ++increasing;
            inc_at = k;
          }
          if (std::adjacent_find(l.begin(), l.end(), std::less_equal<int>()) == l.end()) ++decreasing;
        }
        REQUIRE(increasing == 1);
        for (std::size_t k = 0; k < chains.labels.size(); ++k)
          if (k != inc_at) CHECK(chains.labels[inc_at] < chains.labels[k]);

        const auto greedy = increasing_chain(lat.element(b), lat.element(t));
        CHECK(greedy.labels == chains.labels[inc_at]);
        std::vector<std::size_t> path;
        for (const auto& e : greedy.elements) path.push_back(lat.index_of(e));
        CHECK(path == chains.paths[inc_at]);

        CHECK(count_decreasing_chains(sigma, b, t) == decreasing);
        const long long expected = brute_mobius(poset, b, t);
        CHECK(mobius(sigma, b, t) == expected);
        CHECK(mobius_by_recursion(lat, b, t) == expected);

        std::size_t visited = 0;
        for_each_maximal_chain(sigma, b, t, [&](auto, auto) { ++visited; });
        CHECK(visited == chains.paths.size());
      }
    }
  }
}

TEST_CASE("decreasing chains and Mobius numbers") {
  const OmegaLattice four = OmegaLattice::build(4);
  const EdgeLabeling s4(four);
  CHECK(count_decreasing_chains(s4, four.bottom(), four.top()) == 13);
  CHECK(mobius(s4, four.bottom(), four.top()) == -13);
  const std::size_t w = four.index_of(Permutation::parse("2413"));
  CHECK(count_decreasing_chains(s4, w, w) == 1);
  CHECK(mobius(s4, w, w) == 1);

  const OmegaLattice three = OmegaLattice::build(3);
  CHECK(count_decreasing_chains(EdgeLabeling(three), three.bottom(), three.top()) == 3);

  const long long expected[] = {0, 1, -1, 3, -13, 71, -461};
  for (int n = 1; n <= 6; ++n) {
    const OmegaLattice lat = OmegaLattice::build(n);
    const EdgeLabeling sigma(lat);
    CHECK(mobius(sigma, lat.bottom(), lat.top()) == expected[n]);
    CHECK(mobius_row(lat, lat.bottom())[lat.top()] == expected[n]);
  }
}

TEST_CASE("chain report") {
  const OmegaLattice four = OmegaLattice::build(4);
  const EdgeLabeling sigma(four);
  const ChainReport r = chain_report(sigma, four.bottom(), four.top());
  CHECK(r.bottom == "1234");
  CHECK(r.top == "4321");
  CHECK(r.increasing == std::vector<int>{2, 2, 2});
  CHECK(r.decreasing_count == 13);
  CHECK(r.mobius == -13);
  CHECK(r.max_label_covers.size() == 3);

  const std::size_t w = four.index_of(Permutation::parse("1324"));
  const ChainReport same = chain_report(sigma, w, w);
  CHECK(same.increasing.empty());
  CHECK(same.decreasing_count == 1);
  CHECK(same.mobius == 1);

  CHECK_THROWS_AS(chain_report(sigma, four.top(), four.bottom()), Error);
}
