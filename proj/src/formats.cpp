#include "shardorder/formats.hpp"

#include <algorithm>
#include <sstream>

#include "shardorder/error.hpp"

namespace shardorder {

using nlohmann::json;

json preorder_to_json(const PermutationPreorder& w) {
  const BlockOrder order(w.relation());
  const std::vector<int> place = placements(w);
  json blocks = json::array();
  std::vector<json> by_place(static_cast<std::size_t>(order.size()));
  for (int x = 0; x < order.size(); ++x) {
    by_place[static_cast<std::size_t>(place[static_cast<std::size_t>(x)] - 1)] =
        order.block(x).members;
  }
  for (auto& b : by_place) blocks.push_back(std::move(b));
  json less = json::array();
  std::vector<std::pair<int, int>> covers;
  for (const auto& [x, y] : order.cover_pairs()) {
    covers.emplace_back(place[static_cast<std::size_t>(x)] - 1, place[static_cast<std::size_t>(y)] - 1);
  }
  std::sort(covers.begin(), covers.end());
  for (const auto& [a, b] : covers) less.push_back({a, b});
  return json{{"n", w.size()}, {"blocks", std::move(blocks)}, {"less", std::move(less)}};
}

namespace {

template <typename T>
T field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    fail(ErrorCode::kParse, std::string("missing field \"") + key + "\"");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

PermutationPreorder preorder_from_json(const json& doc) {
  const int n = field<int>(doc, "n");
  if (n < 1 || n > kMaxN) fail(ErrorCode::kParse, "\"n\" out of range");
  const auto blocks = field<std::vector<std::vector<int>>>(doc, "blocks");
  const auto less = field<std::vector<std::vector<int>>>(doc, "less");

  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  Preorder q = Preorder::discrete(n);
  for (const auto& b : blocks) {
    if (b.empty()) fail(ErrorCode::kParse, "empty block");
    for (int v : b) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]++) {
        fail(ErrorCode::kParse, "blocks must partition [1," + std::to_string(n) + "]");
      }
      q.relate(b.front(), v);
      q.relate(v, b.front());
    }
  }
  for (int s : seen) {
    if (s == 0) fail(ErrorCode::kParse, "blocks must partition [1," + std::to_string(n) + "]");
  }
  const int k = static_cast<int>(blocks.size());
  for (const auto& pair : less) {
    if (pair.size() != 2 || pair[0] < 0 || pair[0] >= k || pair[1] < 0 || pair[1] >= k) {
      fail(ErrorCode::kParse, "\"less\" entries must be [blockIndex, blockIndex]");
    }
    q.relate(blocks[static_cast<std::size_t>(pair[0])].front(),
             blocks[static_cast<std::size_t>(pair[1])].front());
  }
  if (q.block_count() != k) {
    fail(ErrorCode::kInvalidArgument, "\"less\" contains a cycle that merges listed blocks");
  }
  return PermutationPreorder(std::move(q));
}

std::string hasse_dot(const OmegaLattice& lattice) {
  std::ostringstream out;
  out << "digraph shard_intersection_order {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out << "  n" << i << " [label=\"" << lattice.word(i).to_string() << "\"];\n";
  }
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t u : lattice.up(i)) out << "  n" << i << " -> n" << u << ";\n";
  }
  out << "}\n";
  return out.str();
}

json hasse_json(const OmegaLattice& lattice) {
  json nodes = json::array();
  json edges = json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    nodes.push_back(lattice.word(i).to_string());
    for (std::size_t u : lattice.up(i)) edges.push_back({i, u});
  }
  return json{{"n", lattice.n()}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

std::string hasse_text(const OmegaLattice& lattice) {
  std::ostringstream out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out << lattice.word(i).to_string() << " rank " << lattice.rank(i) << " ->";
    for (std::size_t u : lattice.up(i)) out << ' ' << lattice.word(u).to_string();
    out << '\n';
  }
  return out.str();
}

json chain_report_json(const ChainReport& report) {
  return json{{"interval", {report.bottom, report.top}},
              {"increasing", report.increasing},
              {"decreasing_count", report.decreasing_count},
              {"mobius", report.mobius},
              {"max_label_covers", report.max_label_covers}};
}

PartitionInput partition_from_json(const json& doc) {
  const int n = field<int>(doc, "n");
  if (n < 1 || n > kMaxN) fail(ErrorCode::kParse, "\"n\" out of range");
  const auto word = field<std::vector<int>>(doc, "coxeter");
  auto blocks = field<std::vector<std::vector<int>>>(doc, "blocks");
  try {
    return PartitionInput{CoxeterElement(n, word), std::move(blocks)};
  } catch (const Error& e) {
    fail(ErrorCode::kParse, e.what());
  }
}

}  // namespace shardorder
