#pragma once

#include <array>
#include <vector>

#include "shardorder/barring.hpp"
#include "shardorder/permutation.hpp"

namespace shardorder {

enum class BarredPattern {
  // 231 whose "2" (first entry) is upper-barred.
  kUpperBar231,
  // 312 whose "2" (last entry) is lower-barred.
  kLowerBar312,
};

/// Every occurrence of `pattern`, as value triples in word order.
/// Brute force over index triples.
std::vector<std::array<int, 3>> find_barred_pattern(const Permutation& p, BarredPattern pattern,
                                                    const Barring& barring);

bool contains_barred_pattern(const Permutation& p, BarredPattern pattern,
                             const Barring& barring);

}  // namespace shardorder
