#pragma once

#include <vector>

namespace shardorder {

enum class Bar { kNone, kLower, kUpper };

/// Upper/lower bars on the values 2..n-1. Values 1 and n carry no bar.
class Barring {
 public:
  Barring() = default;
  /// `bars[v - 2]` is the bar of value v, for v in 2..n-1.
  Barring(int n, std::vector<Bar> bars);

  int size() const { return n_; }
  Bar at(int value) const;
  bool is_lower(int value) const { return at(value) == Bar::kLower; }
  bool is_upper(int value) const { return at(value) == Bar::kUpper; }

  std::vector<int> lower_values() const;
  std::vector<int> upper_values() const;

 private:
  int n_ = 0;
  std::vector<Bar> bars_;
};

}  // namespace shardorder
