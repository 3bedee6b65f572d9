#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "shardorder/lattice.hpp"
#include "shardorder/preorder.hpp"

namespace shardorder {

/// Label of the cover lower ⋖ upper: the larger placement, in `lower`, of the
/// two blocks that merge. Throws Error(kDomain) when the pair is not a cover.
int edge_label(const PermutationPreorder& lower, const PermutationPreorder& upper);

struct BlockPair {
  Block first;   // smaller placement
  Block second;  // larger placement
  int first_placement = 0;
  int second_placement = 0;
};

/// T(w, top): pairs of blocks of w lying in one block of `top` that are
/// incomparable or related by a cover in w. Sorted by (larger placement,
/// smaller placement). Throws Error(kDomain) unless leq(w, top).
std::vector<BlockPair> combinable_pairs(const PermutationPreorder& w,
                                        const PermutationPreorder& top);

struct LabeledChain {
  std::vector<PermutationPreorder> elements;  // bottom first
  std::vector<int> labels;                    // elements.size() - 1 entries
};

/// Greedy chain: always merge the combinable pair with the smallest larger
/// placement, through its unique cover below `top`. Throws Error(kInternal)
/// if that pair or that cover is not unique.
LabeledChain increasing_chain(const PermutationPreorder& bottom, const PermutationPreorder& top);

/// σ on every Hasse edge of a built lattice.
class EdgeLabeling {
 public:
  explicit EdgeLabeling(const OmegaLattice& lattice);

  const OmegaLattice& lattice() const { return *lattice_; }
  /// Labels parallel to lattice().up(i).
  std::span<const int> up_labels(std::size_t i) const { return labels_[i]; }
  int label(std::size_t lower, std::size_t upper) const;

 private:
  const OmegaLattice* lattice_;
  std::vector<std::vector<int>> labels_;
};

/// Calls `visit(elements, labels)` once per maximal chain of [bottom, top].
void for_each_maximal_chain(
    const EdgeLabeling& sigma, std::size_t bottom, std::size_t top,
    const std::function<void(std::span<const std::size_t>, std::span<const int>)>& visit);

/// Maximal chains of [bottom, top] whose labels strictly decrease. Memoised
/// on (element, previous label).
std::uint64_t count_decreasing_chains(const EdgeLabeling& sigma, std::size_t bottom,
                                      std::size_t top);

/// μ(bottom, z) for every z, by μ(x,x) = 1 and μ(x,y) = -Σ_{x≤z<y} μ(x,z).
/// Entries for z not above `bottom` are 0.
std::vector<long long> mobius_row(const OmegaLattice& lattice, std::size_t bottom);

long long mobius_by_recursion(const OmegaLattice& lattice, std::size_t bottom, std::size_t top);

/// (-1)^(rank difference) times the decreasing chain count.
long long mobius_by_chains(const EdgeLabeling& sigma, std::size_t bottom, std::size_t top);

/// Both routes; throws Error(kInternal) if they disagree.
long long mobius(const EdgeLabeling& sigma, std::size_t bottom, std::size_t top);

struct ChainReport {
  std::string bottom;
  std::string top;
  std::vector<int> increasing;
  std::uint64_t decreasing_count = 0;
  long long mobius = 0;
  // For each step of the increasing chain: how many covers inside the
  // interval carry the largest label available at that element.
  std::vector<int> max_label_covers;
};

ChainReport chain_report(const EdgeLabeling& sigma, std::size_t bottom, std::size_t top);

}  // namespace shardorder
