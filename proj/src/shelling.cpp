#include "shardorder/shelling.hpp"

#include <algorithm>
#include <unordered_map>

#include "shardorder/error.hpp"

namespace shardorder {

int edge_label(const PermutationPreorder& lower, const PermutationPreorder& upper) {
  if (!leq(lower, upper) || lower.block_count() != upper.block_count() + 1) {
    fail(ErrorCode::kDomain, "edge_label needs a cover relation");
  }
  const std::vector<Block> blocks = lower.blocks();
  const std::vector<int> place = placements(lower);
  for (const Block& merged : upper.blocks()) {
    int count = 0;
    int label = 0;
    for (std::size_t x = 0; x < blocks.size(); ++x) {
      if ((blocks[x].mask & merged.mask) == blocks[x].mask) {
        ++count;
        label = std::max(label, place[x]);
      }
    }
    if (count == 2) return label;
  }
  fail(ErrorCode::kInternal, "cover does not merge exactly two blocks");
}

std::vector<BlockPair> combinable_pairs(const PermutationPreorder& w,
                                        const PermutationPreorder& top) {
  if (!leq(w, top)) fail(ErrorCode::kDomain, "combinable_pairs needs w <= top");
  const BlockOrder order(w.relation());
  const std::vector<int> place = placements(w);
  std::vector<BlockPair> out;
  for (int x = 0; x < order.size(); ++x) {
    for (int y = x + 1; y < order.size(); ++y) {
      if (!top.relation().equivalent(order.block(x).low, order.block(y).low)) continue;
      if (!combinable(order, x, y)) continue;
      int a = x;
      int b = y;
      if (place[static_cast<std::size_t>(a)] > place[static_cast<std::size_t>(b)]) std::swap(a, b);
      out.push_back(BlockPair{order.block(a), order.block(b), place[static_cast<std::size_t>(a)],
                              place[static_cast<std::size_t>(b)]});
    }
  }
  std::sort(out.begin(), out.end(), [](const BlockPair& l, const BlockPair& r) {
    if (l.second_placement != r.second_placement) return l.second_placement < r.second_placement;
    return l.first_placement < r.first_placement;
  });
  return out;
}

LabeledChain increasing_chain(const PermutationPreorder& bottom, const PermutationPreorder& top) {
  if (!leq(bottom, top)) fail(ErrorCode::kDomain, "increasing_chain needs bottom <= top");
  LabeledChain chain;
  chain.elements.push_back(bottom);
  while (!(chain.elements.back() == top)) {
    const PermutationPreorder& cur = chain.elements.back();
    const std::vector<BlockPair> pairs = combinable_pairs(cur, top);
    if (pairs.empty()) fail(ErrorCode::kInternal, "no combinable pair below top");
    const BlockPair& pick = pairs.front();
    if (pairs.size() > 1 && pairs[1].second_placement == pick.second_placement) {
      fail(ErrorCode::kInternal, "minimal larger placement is not unique");
    }
    std::vector<PermutationPreorder> hits;
    for (PermutationPreorder& c : covers_up(cur)) {
      if (c.relation().equivalent(pick.first.low, pick.second.low) && leq(c, top)) {
        hits.push_back(std::move(c));
      }
    }
    if (hits.size() != 1) {
      fail(ErrorCode::kInternal, "expected one cover merging the chosen pair, found " +
                                     std::to_string(hits.size()));
    }
    chain.labels.push_back(pick.second_placement);
    chain.elements.push_back(std::move(hits.front()));
  }
  return chain;
}

EdgeLabeling::EdgeLabeling(const OmegaLattice& lattice) : lattice_(&lattice) {
  labels_.resize(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t u : lattice.up(i)) {
      labels_[i].push_back(edge_label(lattice.element(i), lattice.element(u)));
    }
  }
}

int EdgeLabeling::label(std::size_t lower, std::size_t upper) const {
  const auto ups = lattice_->up(lower);
  for (std::size_t k = 0; k < ups.size(); ++k) {
    if (ups[k] == upper) return labels_[lower][k];
  }
  fail(ErrorCode::kDomain, "not a Hasse edge");
}

void for_each_maximal_chain(
    const EdgeLabeling& sigma, std::size_t bottom, std::size_t top,
    const std::function<void(std::span<const std::size_t>, std::span<const int>)>& visit) {
  const OmegaLattice& lat = sigma.lattice();
  if (!lat.leq(bottom, top)) fail(ErrorCode::kDomain, "interval endpoints are not comparable");
  std::vector<std::size_t> path{bottom};
  std::vector<int> labels;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == top) {
      visit(path, labels);
      return;
    }
    const auto ups = lat.up(v);
    const auto ls = sigma.up_labels(v);
    for (std::size_t k = 0; k < ups.size(); ++k) {
      if (!lat.leq(ups[k], top)) continue;
      path.push_back(ups[k]);
      labels.push_back(ls[k]);
      walk(ups[k]);
      path.pop_back();
      labels.pop_back();
    }
  };
  walk(bottom);
}

std::uint64_t count_decreasing_chains(const EdgeLabeling& sigma, std::size_t bottom,
                                      std::size_t top) {
  const OmegaLattice& lat = sigma.lattice();
  if (!lat.leq(bottom, top)) fail(ErrorCode::kDomain, "interval endpoints are not comparable");
  const std::size_t stride = static_cast<std::size_t>(lat.n()) + 2;
  std::unordered_map<std::size_t, std::uint64_t> memo;
  std::function<std::uint64_t(std::size_t, int)> count = [&](std::size_t v, int ceiling) {
    if (v == top) return std::uint64_t{1};
    const std::size_t key = v * stride + static_cast<std::size_t>(ceiling);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    const auto ups = lat.up(v);
    const auto ls = sigma.up_labels(v);
    for (std::size_t k = 0; k < ups.size(); ++k) {
      if (ls[k] < ceiling && lat.leq(ups[k], top)) total += count(ups[k], ls[k]);
    }
    memo.emplace(key, total);
    return total;
  };
  return count(bottom, lat.n() + 1);
}

std::vector<long long> mobius_row(const OmegaLattice& lattice, std::size_t bottom) {
  std::vector<std::size_t> above;
  for (std::size_t z = 0; z < lattice.size(); ++z) {
    if (lattice.leq(bottom, z)) above.push_back(z);
  }
  std::stable_sort(above.begin(), above.end(), [&](std::size_t l, std::size_t r) {
    return lattice.rank(l) < lattice.rank(r);
  });
  std::vector<long long> mu_row(lattice.size(), 0);
  for (std::size_t y : above) {
    if (y == bottom) {
      mu_row[y] = 1;
      continue;
    }
    long long sum = 0;
    for (std::size_t z : above) {
      if (lattice.rank(z) >= lattice.rank(y)) break;
      if (lattice.leq(z, y)) sum += mu_row[z];
    }
    mu_row[y] = -sum;
  }
  return mu_row;
}

long long mobius_by_recursion(const OmegaLattice& lattice, std::size_t bottom, std::size_t top) {
  if (!lattice.leq(bottom, top)) fail(ErrorCode::kDomain, "interval endpoints are not comparable");
  return mobius_row(lattice, bottom)[top];
}

long long mobius_by_chains(const EdgeLabeling& sigma, std::size_t bottom, std::size_t top) {
  const OmegaLattice& lat = sigma.lattice();
  const auto chains = static_cast<long long>(count_decreasing_chains(sigma, bottom, top));
  return ((lat.rank(top) - lat.rank(bottom)) % 2 == 0) ? chains : -chains;
}

long long mobius(const EdgeLabeling& sigma, std::size_t bottom, std::size_t top) {
  const long long by_chains = mobius_by_chains(sigma, bottom, top);
  const long long by_recursion = mobius_by_recursion(sigma.lattice(), bottom, top);
  if (by_chains != by_recursion) {
    fail(ErrorCode::kInternal, "Mobius mismatch: chains give " + std::to_string(by_chains) +
                                   ", recursion gives " + std::to_string(by_recursion));
  }
  return by_chains;
}

ChainReport chain_report(const EdgeLabeling& sigma, std::size_t bottom, std::size_t top) {
  const OmegaLattice& lat = sigma.lattice();
  ChainReport report;
  report.bottom = lat.word(bottom).to_string();
  report.top = lat.word(top).to_string();
  const LabeledChain chain = increasing_chain(lat.element(bottom), lat.element(top));
  report.increasing = chain.labels;
  report.decreasing_count = count_decreasing_chains(sigma, bottom, top);
  report.mobius = mobius(sigma, bottom, top);
  for (std::size_t s = 0; s + 1 < chain.elements.size(); ++s) {
    const std::size_t v = lat.index_of(chain.elements[s]);
    const auto ups = lat.up(v);
    const auto ls = sigma.up_labels(v);
    int best = 0;
    int hits = 0;
    for (std::size_t k = 0; k < ups.size(); ++k) {
      if (!lat.leq(ups[k], top)) continue;
      if (ls[k] > best) {
        best = ls[k];
        hits = 0;
      }
      if (ls[k] == best) ++hits;
    }
    report.max_label_covers.push_back(hits);
  }
  return report;
}

}  // namespace shardorder
