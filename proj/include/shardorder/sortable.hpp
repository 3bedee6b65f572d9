#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "shardorder/barring.hpp"
#include "shardorder/permutation.hpp"
#include "shardorder/preorder.hpp"

namespace shardorder {

/// A Coxeter element of S_n as a word in the simple generators s_1..s_{n-1},
/// each used exactly once. {2,1,3} is s_2 s_1 s_3.
class CoxeterElement {
 public:
  CoxeterElement(int n, std::vector<int> word);

  /// "2,1,3,7,6,4,5,8". The empty string is the only word for n = 1.
  static CoxeterElement parse(int n, std::string_view text);
  /// s_1 s_2 ... s_{n-1}: every value lower-barred.
  static CoxeterElement ascending(int n);
  /// s_{n-1} ... s_1: every value upper-barred.
  static CoxeterElement descending(int n);
  /// All (n-1)! words.
  static std::vector<CoxeterElement> all(int n);

  int size() const { return n_; }
  const std::vector<int>& word() const { return word_; }
  /// 0-based position of s_i in the word.
  int position(int generator) const { return position_[static_cast<std::size_t>(generator - 1)]; }
  std::string to_string() const;

  friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) {
    return a.n_ == b.n_ && a.word_ == b.word_;
  }

 private:
  int n_;
  std::vector<int> word_;
  std::vector<int> position_;
};

/// Value i in 2..n-1 is lower-barred iff s_{i-1} comes before s_i.
Barring barring_of(const CoxeterElement& c);

/// Clockwise from 12 o'clock: 1, lower-barred ascending, n, upper-barred
/// descending.
std::vector<int> cycle_of(const CoxeterElement& c);

/// Avoids both 2̄31 and 312̲ under the barring of c.
bool is_c_sortable(const Permutation& p, const CoxeterElement& c);

std::vector<Permutation> c_sortables(const CoxeterElement& c);

/// No two blocks interleave around cycle_of(c). `blocks` must partition [n].
bool is_noncrossing_partition(const std::vector<std::vector<int>>& blocks,
                              const CoxeterElement& c);

/// Direction forced on two overlapping blocks by the bars of the values of
/// one that sit strictly inside the other's interval.
enum class Orientation { kNone, kFirstBelow, kSecondBelow, kConflict };

Orientation forced_orientation(const Block& first, const Block& second, const Barring& barring);

/// Blocks form a c-noncrossing partition and every overlapping pair is
/// ordered the way its strictly-inside values demand.
bool is_noncrossing_preorder(const PermutationPreorder& w, const CoxeterElement& c);

/// The unique noncrossing pre-order on a c-noncrossing partition. Throws
/// Error(kDomain) for a crossing partition and Error(kInternal) if the
/// demanded orientations conflict or the result leaves the lattice.
PermutationPreorder noncrossing_order_of_partition(const std::vector<std::vector<int>>& blocks,
                                                   const CoxeterElement& c);

}  // namespace shardorder
