#include "shardorder/preorder.hpp"

#include <algorithm>
#include <bit>

#include "shardorder/error.hpp"

namespace shardorder {

namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxN) {
    fail(ErrorCode::kInvalidArgument,
         "ground set size " + std::to_string(n) + " outside [1," + std::to_string(kMaxN) + "]");
  }
}

}  // namespace

std::string Block::to_string() const {
  std::string out = "B[" + std::to_string(low) + "," + std::to_string(high) + "]{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(members[i]);
  }
  out.push_back('}');
  return out;
}

Preorder Preorder::discrete(int n) {
  check_size(n);
  Preorder q;
  q.n_ = n;
  for (int i = 0; i < n; ++i) q.rows_[static_cast<std::size_t>(i)] = Row{1} << i;
  return q;
}

Preorder Preorder::complete(int n) {
  check_size(n);
  Preorder q;
  q.n_ = n;
  const Row all = n == 32 ? ~Row{0} : (Row{1} << n) - 1;
  for (int i = 0; i < n; ++i) q.rows_[static_cast<std::size_t>(i)] = all;
  return q;
}

Preorder Preorder::closure_of(int n, std::span<const std::pair<int, int>> pairs) {
  Preorder q = discrete(n);
  for (const auto& [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n) {
      fail(ErrorCode::kInvalidArgument, "relation pair (" + std::to_string(a) + "," +
                                            std::to_string(b) + ") outside [1," +
                                            std::to_string(n) + "]");
    }
    q.relate(a, b);
  }
  return q;
}

Preorder::Row Preorder::down_mask(int a) const {
  Row out = 0;
  for (int x = 0; x < n_; ++x) {
    if ((rows_[static_cast<std::size_t>(x)] >> (a - 1)) & 1U) out |= Row{1} << x;
  }
  return out;
}

void Preorder::relate(int a, int b) {
  if (leq(a, b)) return;
  // New pairs are exactly (x, y) with x ⪯ a and b ⪯ y.
  const Row target = rows_[idx(b)];
  const Row a_bit = Row{1} << (a - 1);
  for (int x = 0; x < n_; ++x) {
    Row& row = rows_[static_cast<std::size_t>(x)];
    if (row & a_bit) row |= target;
  }
}

Preorder Preorder::closed_union(const Preorder& other) const {
  if (other.n_ != n_) fail(ErrorCode::kInvalidArgument, "pre-order sizes differ");
  Preorder out = *this;
  for (int a = 1; a <= n_; ++a) {
    Row extra = other.rows_[idx(a)] & ~out.rows_[idx(a)];
    while (extra) {
      const int b = std::countr_zero(extra) + 1;
      out.relate(a, b);
      extra = other.rows_[idx(a)] & ~out.rows_[idx(a)];
    }
  }
  return out;
}

bool Preorder::is_subrelation_of(const Preorder& other) const {
  if (other.n_ != n_) return false;
  for (int i = 0; i < n_; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (rows_[k] & ~other.rows_[k]) return false;
  }
  return true;
}

int Preorder::block_count() const {
  int count = 0;
  for (int a = 1; a <= n_; ++a) {
    // a is the least member of its class iff nothing smaller is equivalent.
    const Row cls = rows_[idx(a)] & down_mask(a);
    if (std::countr_zero(cls) == a - 1) ++count;
  }
  return count;
}

std::vector<Block> Preorder::blocks() const {
  std::vector<Block> out;
  Row seen = 0;
  for (int a = 1; a <= n_; ++a) {
    if ((seen >> (a - 1)) & 1U) continue;
    const Row cls = rows_[idx(a)] & down_mask(a);
    seen |= cls;
    Block b;
    b.mask = cls;
    for (Row m = cls; m; m &= m - 1) b.members.push_back(std::countr_zero(m) + 1);
    b.low = b.members.front();
    b.high = b.members.back();
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<std::pair<int, int>> Preorder::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n_; ++a) {
    for (int b = 1; b <= n_; ++b) {
      if (a != b && leq(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

BlockOrder::BlockOrder(const Preorder& q) : blocks_(q.blocks()) {
  const int k = size();
  block_of_.assign(static_cast<std::size_t>(q.size()), -1);
  for (int x = 0; x < k; ++x) {
    for (int v : blocks_[static_cast<std::size_t>(x)].members) {
      block_of_[static_cast<std::size_t>(v - 1)] = x;
    }
  }
  above_.assign(static_cast<std::size_t>(k), 0);
  below_.assign(static_cast<std::size_t>(k), 0);
  for (int x = 0; x < k; ++x) {
    const int rep = blocks_[static_cast<std::size_t>(x)].low;
    for (int y = 0; y < k; ++y) {
      if (x != y && q.leq(rep, blocks_[static_cast<std::size_t>(y)].low)) {
        above_[static_cast<std::size_t>(x)] |= std::uint32_t{1} << y;
        below_[static_cast<std::size_t>(y)] |= std::uint32_t{1} << x;
      }
    }
  }
}

bool BlockOrder::covered_by(int x, int y) const {
  return precedes(x, y) &&
         (above_[static_cast<std::size_t>(x)] & below_[static_cast<std::size_t>(y)]) == 0;
}

std::vector<std::pair<int, int>> BlockOrder::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x) {
    for (int y = 0; y < size(); ++y) {
      if (covered_by(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::string AxiomViolation::describe() const {
  if (axiom == Axiom::kOverlapComparable) {
    return "(P1) overlapping blocks " + first.to_string() + " and " + second.to_string() +
           " are incomparable";
  }
  return "(P2) cover " + first.to_string() + " < " + second.to_string() +
         " joins blocks whose intervals are disjoint";
}

std::optional<AxiomViolation> find_axiom_violation(const Preorder& q) {
  const BlockOrder order(q);
  const int k = order.size();
  for (int x = 0; x < k; ++x) {
    for (int y = x + 1; y < k; ++y) {
      const Block& bx = order.block(x);
      const Block& by = order.block(y);
      const bool overlap = bx.overlaps(by);
      if (overlap && !order.comparable(x, y)) {
        return AxiomViolation{Axiom::kOverlapComparable, bx, by};
      }
      if (!overlap) {
        if (order.covered_by(x, y)) return AxiomViolation{Axiom::kCoverOverlaps, bx, by};
        if (order.covered_by(y, x)) return AxiomViolation{Axiom::kCoverOverlaps, by, bx};
      }
    }
  }
  return std::nullopt;
}

PermutationPreorder::PermutationPreorder(Preorder q) : rel_(std::move(q)) {
  if (rel_.size() < 1) fail(ErrorCode::kInvalidArgument, "empty pre-order");
  if (auto v = find_axiom_violation(rel_)) {
    fail(ErrorCode::kInvalidArgument, "not a permutation pre-order: " + v->describe());
  }
}

PermutationPreorder PermutationPreorder::assume_valid(Preorder q) {
  return PermutationPreorder(Unchecked{}, std::move(q));
}

PermutationPreorder PermutationPreorder::bottom(int n) {
  return assume_valid(Preorder::discrete(n));
}

PermutationPreorder PermutationPreorder::top(int n) {
  return assume_valid(Preorder::complete(n));
}

PermutationPreorder mu(const Permutation& p) {
  const int n = p.size();
  Preorder q = Preorder::discrete(n);
  const auto runs = descending_runs(p);
  for (const auto& run : runs) {
    for (int v : run.values) {
      q.relate(run.low(), v);
      q.relate(v, run.low());
    }
  }
  // Overlapping runs: the one further right is the greater block.
  for (std::size_t r = 0; r < runs.size(); ++r) {
    for (std::size_t s = r + 1; s < runs.size(); ++s) {
      const bool overlap = runs[r].low() <= runs[s].high() && runs[s].low() <= runs[r].high();
      if (overlap) q.relate(runs[r].low(), runs[s].low());
    }
  }
  return PermutationPreorder::assume_valid(std::move(q));
}

std::vector<int> placements(const PermutationPreorder& w) {
  const BlockOrder order(w.relation());
  const int k = order.size();
  std::vector<int> out(static_cast<std::size_t>(k));
  std::uint32_t taken = 0;
  for (int x = 0; x < k; ++x) {
    // Count blocks that must sit to the right of x.
    int to_right = 0;
    for (int y = 0; y < k; ++y) {
      if (y == x) continue;
      const bool before = order.precedes(x, y) ||
                          (!order.comparable(x, y) && order.block(x).high < order.block(y).low);
      if (before) ++to_right;
    }
    const int place = k - to_right;
    const std::uint32_t bit = std::uint32_t{1} << (place - 1);
    if (taken & bit) {
      fail(ErrorCode::kInternal,
           "run order of blocks is not a total order (placement " + std::to_string(place) +
               " repeated)");
    }
    taken |= bit;
    out[static_cast<std::size_t>(x)] = place;
  }
  return out;
}

std::vector<Block> blocks_by_placement(const PermutationPreorder& w) {
  std::vector<Block> blocks = w.blocks();
  const std::vector<int> place = placements(w);
  std::vector<Block> out(blocks.size());
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    out[static_cast<std::size_t>(place[x] - 1)] = std::move(blocks[x]);
  }
  return out;
}

Permutation lambda(const PermutationPreorder& w) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(w.size()));
  for (const Block& b : blocks_by_placement(w)) {
    word.insert(word.end(), b.members.rbegin(), b.members.rend());
  }
  return Permutation(std::move(word));
}

}  // namespace shardorder

std::size_t std::hash<shardorder::Preorder>::operator()(
    const shardorder::Preorder& q) const noexcept {
  std::size_t h = static_cast<std::size_t>(q.size());
  for (auto row : q.rows()) h = h * 0x9E3779B97F4A7C15ULL + row;
  return h;
}
