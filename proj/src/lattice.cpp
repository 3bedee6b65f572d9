#include "shardorder/lattice.hpp"

#include <algorithm>
#include <set>

#include "shardorder/error.hpp"

namespace shardorder {

bool leq(const PermutationPreorder& a, const PermutationPreorder& b) {
  if (a.size() != b.size()) fail(ErrorCode::kInvalidArgument, "pre-order sizes differ");
  return a.relation().is_subrelation_of(b.relation());
}

bool combinable(const BlockOrder& order, int x, int y) {
  return !order.comparable(x, y) || order.covered_by(x, y) || order.covered_by(y, x);
}

namespace {

// Orient every overlapping incomparable pair until none is left, keeping only
// branches that stay at `target` blocks.
void orient_overlaps(const Preorder& candidate, int target, std::set<Preorder>& out) {
  const BlockOrder order(candidate);
  for (int x = 0; x < order.size(); ++x) {
    for (int y = x + 1; y < order.size(); ++y) {
      if (order.comparable(x, y) || !order.block(x).overlaps(order.block(y))) continue;
      const int a = order.block(x).low;
      const int b = order.block(y).low;
      for (const Preorder& next : {candidate.related(a, b), candidate.related(b, a)}) {
        if (next.block_count() == target) orient_overlaps(next, target, out);
      }
      return;
    }
  }
  if (is_permutation_preorder(candidate)) out.insert(candidate);
}

}  // namespace

std::vector<PermutationPreorder> covers_up(const PermutationPreorder& w) {
  const Preorder& rel = w.relation();
  const BlockOrder order(rel);
  const int target = order.size() - 1;
  std::set<Preorder> found;
  for (int x = 0; x < order.size(); ++x) {
    for (int y = x + 1; y < order.size(); ++y) {
      if (!combinable(order, x, y)) continue;
      const int a = order.block(x).low;
      const int b = order.block(y).low;
      Preorder merged = rel.related(a, b);
      merged.relate(b, a);
      if (merged.block_count() != target) continue;
      orient_overlaps(merged, target, found);
    }
  }
  std::vector<std::pair<Permutation, PermutationPreorder>> keyed;
  keyed.reserve(found.size());
  for (const Preorder& q : found) {
    auto e = PermutationPreorder::assume_valid(q);
    keyed.emplace_back(lambda(e), std::move(e));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<PermutationPreorder> out;
  out.reserve(keyed.size());
  for (auto& [word, e] : keyed) out.push_back(std::move(e));
  return out;
}

PermutationPreorder join(const PermutationPreorder& a, const PermutationPreorder& b) {
  if (a.size() != b.size()) fail(ErrorCode::kInvalidArgument, "pre-order sizes differ");
  Preorder u = a.relation().closed_union(b.relation());
  if (auto v = find_axiom_violation(u)) {
    fail(ErrorCode::kInternal, "join left the lattice: " + v->describe());
  }
  return PermutationPreorder::assume_valid(std::move(u));
}

PermutationPreorder meet(const PermutationPreorder& a, const PermutationPreorder& b) {
  if (a.size() != b.size()) fail(ErrorCode::kInvalidArgument, "pre-order sizes differ");
  std::vector<PermutationPreorder> lower;
  for (const Permutation& p : all_permutations(a.size())) {
    PermutationPreorder z = mu(p);
    if (leq(z, a) && leq(z, b)) lower.push_back(std::move(z));
  }
  const auto best = std::max_element(lower.begin(), lower.end(), [](const auto& l, const auto& r) {
    return rank(l) < rank(r);
  });
  for (const auto& z : lower) {
    if (!leq(z, *best)) fail(ErrorCode::kInternal, "common lower bounds have no maximum");
  }
  return *best;
}

OmegaLattice OmegaLattice::build(int n, int cap) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be positive");
  if (n > cap) {
    fail(ErrorCode::kResource, "n = " + std::to_string(n) + " exceeds the lattice cap of " +
                                   std::to_string(cap));
  }
  OmegaLattice lat;
  lat.n_ = n;
  lat.words_ = all_permutations(n);
  const std::size_t count = lat.words_.size();
  lat.elements_.reserve(count);
  lat.ranks_.reserve(count);
  for (const Permutation& p : lat.words_) {
    lat.elements_.push_back(mu(p));
    lat.ranks_.push_back(shardorder::rank(lat.elements_.back()));
  }
  lat.bottom_ = 0;          // identity word
  lat.top_ = count - 1;     // reversal word

  lat.words_per_row_ = (count + 63) / 64;
  lat.leq_.assign(count * lat.words_per_row_, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const Preorder& ri = lat.elements_[i].relation();
    for (std::size_t j = 0; j < count; ++j) {
      if (lat.ranks_[j] < lat.ranks_[i]) continue;
      if (ri.is_subrelation_of(lat.elements_[j].relation())) {
        lat.leq_[i * lat.words_per_row_ + j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }

  // Graded: covers are exactly the comparable pairs one rank apart.
  lat.up_.assign(count, {});
  lat.down_.assign(count, {});
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (lat.ranks_[j] == lat.ranks_[i] + 1 && lat.leq(i, j)) {
        lat.up_[i].push_back(j);
        lat.down_[j].push_back(i);
        ++lat.edge_count_;
      }
    }
  }
  return lat;
}

std::size_t OmegaLattice::index_of(const Permutation& p) const {
  if (p.size() != n_) fail(ErrorCode::kInvalidArgument, "permutation size differs from lattice n");
  return lex_rank(p);
}

std::size_t OmegaLattice::index_of(const PermutationPreorder& w) const {
  if (w.size() != n_) fail(ErrorCode::kInvalidArgument, "pre-order size differs from lattice n");
  return lex_rank(lambda(w));
}

std::size_t OmegaLattice::join(std::size_t i, std::size_t j) const {
  return index_of(shardorder::join(elements_[i], elements_[j]));
}

std::size_t OmegaLattice::meet(std::size_t i, std::size_t j) const {
  std::size_t best = bottom_;
  std::vector<std::size_t> lower;
  for (std::size_t z = 0; z < size(); ++z) {
    if (leq(z, i) && leq(z, j)) {
      lower.push_back(z);
      if (ranks_[z] > ranks_[best]) best = z;
    }
  }
  for (std::size_t z : lower) {
    if (!leq(z, best)) fail(ErrorCode::kInternal, "common lower bounds have no maximum");
  }
  return best;
}

Interval OmegaLattice::interval(std::size_t bottom, std::size_t top) const {
  if (!leq(bottom, top)) {
    fail(ErrorCode::kDomain, "interval endpoints are not comparable: " +
                                 words_[bottom].to_string() + " vs " + words_[top].to_string());
  }
  Interval iv;
  iv.bottom = bottom;
  iv.top = top;
  for (std::size_t z = 0; z < size(); ++z) {
    if (leq(bottom, z) && leq(z, top)) iv.members.push_back(z);
  }
  for (std::size_t z : iv.members) {
    for (std::size_t u : up_[z]) {
      if (leq(u, top)) iv.edges.emplace_back(z, u);
    }
  }
  return iv;
}

}  // namespace shardorder
