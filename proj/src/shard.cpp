#include "shardorder/shard.hpp"

#include <charconv>

#include "shardorder/error.hpp"

namespace shardorder {

std::string Shard::to_string() const {
  std::string out = "H(" + std::to_string(i) + "," + std::to_string(j) + ")[";
  for (int s : signs) out.push_back(s > 0 ? '+' : '-');
  out.push_back(']');
  return out;
}

Shard Shard::parse(std::string_view text) {
  auto bad = [&](const std::string& why) -> Shard {
    fail(ErrorCode::kParse, "bad shard '" + std::string(text) + "': " + why);
  };
  if (text.size() < 7 || text.substr(0, 2) != "H(") return bad("expected H(i,j)[...]");
  const auto comma = text.find(',');
  const auto close = text.find(')');
  if (comma == std::string_view::npos || close == std::string_view::npos || close < comma) {
    return bad("expected H(i,j)[...]");
  }
  Shard s;
  auto num = [&](std::string_view f, int& out) {
    auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), out);
    return ec == std::errc() && p == f.data() + f.size() && !f.empty();
  };
  if (!num(text.substr(2, comma - 2), s.i) || !num(text.substr(comma + 1, close - comma - 1), s.j)) {
    return bad("hyperplane indices");
  }
  if (s.i < 1 || s.j <= s.i) return bad("need 1 <= i < j");
  std::string_view rest = text.substr(close + 1);
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') return bad("sign list");
  rest = rest.substr(1, rest.size() - 2);
  for (char c : rest) {
    if (c == '+') {
      s.signs.push_back(1);
    } else if (c == '-') {
      s.signs.push_back(-1);
    } else {
      return bad("signs must be '+' or '-'");
    }
  }
  if (static_cast<int>(s.signs.size()) != s.j - s.i - 1) return bad("need j-i-1 signs");
  return s;
}

std::vector<Shard> enumerate_shards(int n) {
  if (n < 1 || n > kMaxN) fail(ErrorCode::kInvalidArgument, "n out of range");
  std::vector<Shard> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int free = j - i - 1;
      for (unsigned long long pattern = 0; pattern < (1ULL << free); ++pattern) {
        Shard s{i, j, {}};
        // Most significant bit is the first sign; a set bit is '-'.
        for (int t = 0; t < free; ++t) {
          s.signs.push_back(((pattern >> (free - 1 - t)) & 1ULL) ? -1 : 1);
        }
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

unsigned long long shard_count(int n) {
  unsigned long long total = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) total += 1ULL << (j - i - 1);
  }
  return total;
}

std::vector<Shard> lower_shards(const Permutation& p) {
  std::vector<Shard> out;
  for (const auto& [big, small] : descents(p)) {
    Shard s{small, big, {}};
    for (int k = small + 1; k < big; ++k) {
      s.signs.push_back(is_inversion(p, k, small) ? -1 : 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

ShardIntersection::ShardIntersection(int n) : closed_(Preorder::discrete(n)) {}

void ShardIntersection::add_equality(int a, int b) {
  closed_.relate(a, b);
  closed_.relate(b, a);
}

void ShardIntersection::add_inequality(int a, int b) { closed_.relate(a, b); }

std::vector<std::pair<int, int>> ShardIntersection::equalities() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= size(); ++a) {
    for (int b = a + 1; b <= size(); ++b) {
      if (closed_.equivalent(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> ShardIntersection::inequalities() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= size(); ++a) {
    for (int b = 1; b <= size(); ++b) {
      if (a != b && closed_.leq(a, b) && !closed_.leq(b, a)) out.emplace_back(a, b);
    }
  }
  return out;
}

ShardIntersection intersect(int n, std::span<const Shard> shards) {
  ShardIntersection g(n);
  for (const Shard& s : shards) {
    if (s.i < 1 || s.j > n || s.i >= s.j) {
      fail(ErrorCode::kInvalidArgument, "shard " + s.to_string() + " not in S_" + std::to_string(n));
    }
    g.add_equality(s.i, s.j);
    for (int k = s.i + 1; k < s.j; ++k) {
      if (s.sign(k) > 0) {
        g.add_inequality(s.i, k);
      } else {
        g.add_inequality(k, s.i);
      }
    }
  }
  return g;
}

Preorder to_preorder(const ShardIntersection& g) { return g.closed_relation(); }

}  // namespace shardorder
