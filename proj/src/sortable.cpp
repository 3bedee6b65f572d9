#include "shardorder/sortable.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "shardorder/barred_pattern.hpp"
#include "shardorder/error.hpp"

namespace shardorder {

Barring::Barring(int n, std::vector<Bar> bars) : n_(n), bars_(std::move(bars)) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "barring size must be positive");
  if (static_cast<int>(bars_.size()) != std::max(n - 2, 0)) {
    fail(ErrorCode::kInvalidArgument, "barring needs one bar per value 2..n-1");
  }
}

Bar Barring::at(int value) const {
  if (value <= 1 || value >= n_) return Bar::kNone;
  return bars_[static_cast<std::size_t>(value - 2)];
}

std::vector<int> Barring::lower_values() const {
  std::vector<int> out;
  for (int v = 2; v < n_; ++v) {
    if (is_lower(v)) out.push_back(v);
  }
  return out;
}

std::vector<int> Barring::upper_values() const {
  std::vector<int> out;
  for (int v = 2; v < n_; ++v) {
    if (is_upper(v)) out.push_back(v);
  }
  return out;
}

CoxeterElement::CoxeterElement(int n, std::vector<int> word) : n_(n), word_(std::move(word)) {
  if (n < 1 || n > kMaxN) fail(ErrorCode::kInvalidArgument, "Coxeter element size out of range");
  if (static_cast<int>(word_.size()) != n - 1) {
    fail(ErrorCode::kInvalidArgument, "Coxeter word for S_" + std::to_string(n) + " needs " +
                                          std::to_string(n - 1) + " generators");
  }
  position_.assign(word_.size(), -1);
  for (std::size_t k = 0; k < word_.size(); ++k) {
    const int g = word_[k];
    if (g < 1 || g > n - 1 || position_[static_cast<std::size_t>(g - 1)] != -1) {
      fail(ErrorCode::kInvalidArgument,
           "Coxeter word must use each of s_1..s_" + std::to_string(n - 1) + " exactly once");
    }
    position_[static_cast<std::size_t>(g - 1)] = static_cast<int>(k);
  }
}

CoxeterElement CoxeterElement::parse(int n, std::string_view text) {
  std::vector<int> word;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(start, end - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    // Accept an optional 's' prefix, as in "s2,s1,s3".
    if (!field.empty() && (field.front() == 's' || field.front() == 'S')) field.remove_prefix(1);
    int g = 0;
    auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), g);
    if (field.empty() || ec != std::errc() || p != field.data() + field.size()) {
      fail(ErrorCode::kParse, "bad generator '" + std::string(field) + "' in Coxeter word");
    }
    word.push_back(g);
    start = end + 1;
  }
  try {
    return CoxeterElement(n, std::move(word));
  } catch (const Error& e) {
    fail(ErrorCode::kParse, e.what());
  }
}

CoxeterElement CoxeterElement::ascending(int n) {
  std::vector<int> word(static_cast<std::size_t>(std::max(n - 1, 0)));
  std::iota(word.begin(), word.end(), 1);
  return CoxeterElement(n, std::move(word));
}

CoxeterElement CoxeterElement::descending(int n) {
  std::vector<int> word(static_cast<std::size_t>(std::max(n - 1, 0)));
  std::iota(word.rbegin(), word.rend(), 1);
  return CoxeterElement(n, std::move(word));
}

std::vector<CoxeterElement> CoxeterElement::all(int n) {
  std::vector<int> word(static_cast<std::size_t>(std::max(n - 1, 0)));
  std::iota(word.begin(), word.end(), 1);
  std::vector<CoxeterElement> out;
  do {
    out.emplace_back(n, word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::string CoxeterElement::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (k > 0) out.push_back(',');
    out += std::to_string(word_[k]);
  }
  return out;
}

Barring barring_of(const CoxeterElement& c) {
  std::vector<Bar> bars;
  for (int i = 2; i < c.size(); ++i) {
    bars.push_back(c.position(i - 1) < c.position(i) ? Bar::kLower : Bar::kUpper);
  }
  return Barring(c.size(), std::move(bars));
}

std::vector<int> cycle_of(const CoxeterElement& c) {
  const Barring bars = barring_of(c);
  std::vector<int> cycle{1};
  if (c.size() == 1) return cycle;
  for (int v : bars.lower_values()) cycle.push_back(v);
  cycle.push_back(c.size());
  const std::vector<int> upper = bars.upper_values();
  cycle.insert(cycle.end(), upper.rbegin(), upper.rend());
  return cycle;
}

bool is_c_sortable(const Permutation& p, const CoxeterElement& c) {
  if (p.size() != c.size()) fail(ErrorCode::kInvalidArgument, "permutation and Coxeter sizes differ");
  const Barring bars = barring_of(c);
  return !contains_barred_pattern(p, BarredPattern::kUpperBar231, bars) &&
         !contains_barred_pattern(p, BarredPattern::kLowerBar312, bars);
}

std::vector<Permutation> c_sortables(const CoxeterElement& c) {
  std::vector<Permutation> out;
  for (Permutation& p : all_permutations(c.size())) {
    if (is_c_sortable(p, c)) out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::vector<int> owner_of(const std::vector<std::vector<int>>& blocks, int n) {
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) fail(ErrorCode::kInvalidArgument, "empty block in partition");
    for (int v : blocks[b]) {
      if (v < 1 || v > n || owner[static_cast<std::size_t>(v - 1)] != -1) {
        fail(ErrorCode::kInvalidArgument, "blocks do not partition [" + std::to_string(n) + "]");
      }
      owner[static_cast<std::size_t>(v - 1)] = static_cast<int>(b);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    fail(ErrorCode::kInvalidArgument, "blocks do not partition [" + std::to_string(n) + "]");
  }
  return owner;
}

// Two blocks cross when, reading around the cycle, their members alternate
// at least four times.
bool cross(int a, int b, const std::vector<int>& owner, const std::vector<int>& cycle) {
  std::vector<int> seq;
  for (int v : cycle) {
    const int o = owner[static_cast<std::size_t>(v - 1)];
    if (o == a || o == b) seq.push_back(o);
  }
  int changes = 0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] != seq[(k + 1) % seq.size()]) ++changes;
  }
  return changes >= 4;
}

}  // namespace

bool is_noncrossing_partition(const std::vector<std::vector<int>>& blocks,
                              const CoxeterElement& c) {
  const std::vector<int> owner = owner_of(blocks, c.size());
  const std::vector<int> cycle = cycle_of(c);
  const int k = static_cast<int>(blocks.size());
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (cross(a, b, owner, cycle)) return false;
    }
  }
  return true;
}

Orientation forced_orientation(const Block& first, const Block& second, const Barring& barring) {
  bool first_below = false;
  bool second_below = false;
  for (int v : second.members) {
    if (first.low < v && v < first.high) {
      if (barring.is_upper(v)) first_below = true;
      if (barring.is_lower(v)) second_below = true;
    }
  }
  for (int v : first.members) {
    if (second.low < v && v < second.high) {
      if (barring.is_upper(v)) second_below = true;
      if (barring.is_lower(v)) first_below = true;
    }
  }
  if (first_below && second_below) return Orientation::kConflict;
  if (first_below) return Orientation::kFirstBelow;
  if (second_below) return Orientation::kSecondBelow;
  return Orientation::kNone;
}

bool is_noncrossing_preorder(const PermutationPreorder& w, const CoxeterElement& c) {
  if (w.size() != c.size()) fail(ErrorCode::kInvalidArgument, "pre-order and Coxeter sizes differ");
  const BlockOrder order(w.relation());
  std::vector<std::vector<int>> members;
  for (const Block& b : order.blocks()) members.push_back(b.members);
  if (!is_noncrossing_partition(members, c)) return false;
  const Barring bars = barring_of(c);
  for (int x = 0; x < order.size(); ++x) {
    for (int y = x + 1; y < order.size(); ++y) {
      if (!order.block(x).overlaps(order.block(y))) continue;
      switch (forced_orientation(order.block(x), order.block(y), bars)) {
        case Orientation::kFirstBelow:
          if (!order.precedes(x, y)) return false;
          break;
        case Orientation::kSecondBelow:
          if (!order.precedes(y, x)) return false;
          break;
        case Orientation::kNone:
        case Orientation::kConflict:
          return false;
      }
    }
  }
  return true;
}

PermutationPreorder noncrossing_order_of_partition(const std::vector<std::vector<int>>& blocks,
                                                   const CoxeterElement& c) {
  const int n = c.size();
  if (!is_noncrossing_partition(blocks, c)) {
    fail(ErrorCode::kDomain, "partition is not c-noncrossing for c = " + c.to_string());
  }
  Preorder q = Preorder::discrete(n);
  for (const auto& b : blocks) {
    for (int v : b) {
      q.relate(b.front(), v);
      q.relate(v, b.front());
    }
  }
  const std::vector<Block> bs = q.blocks();
  const Barring bars = barring_of(c);
  for (std::size_t x = 0; x < bs.size(); ++x) {
    for (std::size_t y = x + 1; y < bs.size(); ++y) {
      if (!bs[x].overlaps(bs[y])) continue;
      switch (forced_orientation(bs[x], bs[y], bars)) {
        case Orientation::kFirstBelow:
          q.relate(bs[x].low, bs[y].low);
          break;
        case Orientation::kSecondBelow:
          q.relate(bs[y].low, bs[x].low);
          break;
        case Orientation::kNone:
          fail(ErrorCode::kInternal, "overlapping blocks " + bs[x].to_string() + " and " +
                                         bs[y].to_string() + " have no inside witness");
        case Orientation::kConflict:
          fail(ErrorCode::kInternal, "conflicting orientation demands for " + bs[x].to_string() +
                                         " and " + bs[y].to_string());
      }
    }
  }
  if (q.block_count() != static_cast<int>(bs.size())) {
    fail(ErrorCode::kInternal, "orientation demands collapse blocks");
  }
  if (auto v = find_axiom_violation(q)) {
    fail(ErrorCode::kInternal, "noncrossing order left the lattice: " + v->describe());
  }
  return PermutationPreorder::assume_valid(std::move(q));
}

}  // namespace shardorder
