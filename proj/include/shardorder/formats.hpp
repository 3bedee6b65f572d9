#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "shardorder/lattice.hpp"
#include "shardorder/preorder.hpp"
#include "shardorder/shelling.hpp"
#include "shardorder/sortable.hpp"

namespace shardorder {

/// {"n": int, "blocks": [[members...]...], "less": [[i, j]...]}
///
/// Blocks are listed by placement with ascending members; "less" holds the
/// cover pairs of the block order as 0-based indices into "blocks".
nlohmann::json preorder_to_json(const PermutationPreorder& w);

/// Rebuilds the relation by transitive closure of the listed covers and
/// validates (P1)/(P2). Throws Error(kParse) for malformed documents and
/// Error(kInvalidArgument) for well-formed ones that are not permutation
/// pre-orders.
PermutationPreorder preorder_from_json(const nlohmann::json& doc);

/// Hasse diagram with nodes named by lambda words in lattice order.
std::string hasse_dot(const OmegaLattice& lattice);
/// {"n": int, "nodes": [word...], "edges": [[from, to]...]}
nlohmann::json hasse_json(const OmegaLattice& lattice);
/// One line per element: "word rank r -> cover cover ...".
std::string hasse_text(const OmegaLattice& lattice);

/// {"interval": [bottom, top], "increasing": [...], "decreasing_count": int,
///  "mobius": int, "max_label_covers": [...]}
nlohmann::json chain_report_json(const ChainReport& report);

struct PartitionInput {
  CoxeterElement coxeter;
  std::vector<std::vector<int>> blocks;
};

/// {"n": int, "coxeter": [generator...], "blocks": [[...]...]}
PartitionInput partition_from_json(const nlohmann::json& doc);

}  // namespace shardorder
