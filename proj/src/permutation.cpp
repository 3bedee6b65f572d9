#include "shardorder/permutation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <numeric>

#include "shardorder/error.hpp"

namespace shardorder {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  if (n < 1) fail(ErrorCode::kInvalidArgument, "permutation must be non-empty");
  inverse_.assign(word_.size(), -1);
  for (int i = 0; i < n; ++i) {
    const int v = word_[static_cast<std::size_t>(i)];
    if (v < 1 || v > n) {
      fail(ErrorCode::kInvalidArgument,
           "value " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
    }
    int& slot = inverse_[static_cast<std::size_t>(v - 1)];
    if (slot != -1) {
      fail(ErrorCode::kInvalidArgument, "value " + std::to_string(v) + " repeated");
    }
    slot = i;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.rbegin(), w.rend(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) fail(ErrorCode::kParse, "empty permutation string");

  std::vector<int> word;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') {
        fail(ErrorCode::kParse, "bad character in compact permutation: '" +
                                    std::string(1, ch) + "'");
      }
      word.push_back(ch - '0');
    }
    if (word.size() > 9) {
      fail(ErrorCode::kParse, "compact form only allowed for n <= 9; use commas");
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view field = text.substr(start, end - start);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        fail(ErrorCode::kParse, "bad field in permutation: '" + std::string(field) + "'");
      }
      word.push_back(value);
      start = end + 1;
    }
  }
  try {
    return Permutation(std::move(word));
  } catch (const Error& e) {
    fail(ErrorCode::kParse, e.what());
  }
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!compact && i > 0) out.push_back(',');
    out += std::to_string(word_[i]);
  }
  return out;
}

std::vector<std::pair<int, int>> inversions(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  const auto w = p.word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) out.emplace_back(w[i], w[j]);
    }
  }
  return out;
}

bool is_inversion(const Permutation& p, int larger, int smaller) {
  return larger > smaller && p.position_of(larger) < p.position_of(smaller);
}

std::vector<DescendingRun> descending_runs(const Permutation& p) {
  std::vector<DescendingRun> runs;
  const auto w = p.word();
  for (int i = 0; i < p.size(); ++i) {
    if (i == 0 || w[static_cast<std::size_t>(i - 1)] < w[static_cast<std::size_t>(i)]) {
      runs.push_back(DescendingRun{{}, i, i});
    }
    runs.back().values.push_back(w[static_cast<std::size_t>(i)]);
    runs.back().end_index = i;
  }
  return runs;
}

std::vector<std::pair<int, int>> descents(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  const auto w = p.word();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) out.emplace_back(w[i], w[i + 1]);
  }
  return out;
}

bool is_indecomposable(const Permutation& p) {
  int prefix_max = 0;
  for (int i = 0; i + 1 < p.size(); ++i) {
    prefix_max = std::max(prefix_max, p.at(i));
    if (prefix_max == i + 1) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::size_t lex_rank(const Permutation& p) {
  // Lehmer code read as a factorial-base number.
  const int n = p.size();
  std::size_t rank = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    const int v = p.at(i);
    const std::uint32_t below = (std::uint32_t{1} << (v - 1)) - 1;
    const int smaller_unused = v - 1 - std::popcount(used & below);
    rank = rank * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller_unused);
    used |= std::uint32_t{1} << (v - 1);
  }
  return rank;
}

}  // namespace shardorder
