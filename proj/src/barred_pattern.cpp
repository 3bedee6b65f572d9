#include "shardorder/barred_pattern.hpp"

#include "shardorder/error.hpp"

namespace shardorder {

namespace {

template <typename Visit>
bool scan(const Permutation& p, BarredPattern pattern, const Barring& barring, Visit visit) {
  if (barring.size() != p.size()) {
    fail(ErrorCode::kInvalidArgument, "barring and permutation sizes differ");
  }
  const auto w = p.word();
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const int a = w[i];
        const int b = w[j];
        const int c = w[k];
        bool hit = false;
        if (pattern == BarredPattern::kUpperBar231) {
          hit = c < a && a < b && barring.is_upper(a);
        } else {
          hit = b < c && c < a && barring.is_lower(c);
        }
        if (hit && !visit(std::array<int, 3>{a, b, c})) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<std::array<int, 3>> find_barred_pattern(const Permutation& p, BarredPattern pattern,
                                                    const Barring& barring) {
  std::vector<std::array<int, 3>> out;
  scan(p, pattern, barring, [&](const std::array<int, 3>& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

bool contains_barred_pattern(const Permutation& p, BarredPattern pattern,
                             const Barring& barring) {
  return scan(p, pattern, barring, [](const std::array<int, 3>&) { return false; });
}

}  // namespace shardorder
