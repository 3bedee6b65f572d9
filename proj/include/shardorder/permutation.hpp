#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shardorder {

// Largest ground set any relation-backed type supports (rows are 32-bit masks).
inline constexpr int kMaxN = 32;

/// A permutation of [n] in one-line notation. Values are 1-based; positions
/// into word() are 0-based.
class Permutation {
 public:
  /// Throws Error(kInvalidArgument) unless `word` is a bijection on [n], n >= 1.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation reversal(int n);

  /// Accepts compact form ("26314758", only for n <= 9) or comma-separated
  /// form ("2,6,3,1,4,7,5,8").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  int at(int position) const { return word_[static_cast<std::size_t>(position)]; }
  std::span<const int> word() const { return word_; }

  /// Position of value v (1-based value, 0-based result).
  int position_of(int value) const {
    return inverse_[static_cast<std::size_t>(value - 1)];
  }

  /// Compact form for n <= 9, comma form otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.word_ == b.word_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
  std::vector<int> inverse_;
};

struct DescendingRun {
  std::vector<int> values;  // strictly decreasing
  int start_index = 0;      // position of values.front() in the word
  int end_index = 0;        // position of values.back(), inclusive
  int low() const { return values.back(); }
  int high() const { return values.front(); }
};

/// Pairs (a, b) with a before b in the word and a > b, in scan order.
std::vector<std::pair<int, int>> inversions(const Permutation& p);

bool is_inversion(const Permutation& p, int larger, int smaller);

std::vector<DescendingRun> descending_runs(const Permutation& p);

/// Adjacent pairs (p_i, p_{i+1}) with p_i > p_{i+1}.
std::vector<std::pair<int, int>> descents(const Permutation& p);

/// No proper prefix of the word is a permutation of {1..k}.
bool is_indecomposable(const Permutation& p);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Index of p in the lexicographic order of S_n.
std::size_t lex_rank(const Permutation& p);

}  // namespace shardorder
