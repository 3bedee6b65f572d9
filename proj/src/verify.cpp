#include "shardorder/verify.hpp"

#include <algorithm>
#include <set>

#include "shardorder/error.hpp"
#include "shardorder/lattice.hpp"
#include "shardorder/permutation.hpp"
#include "shardorder/preorder.hpp"
#include "shardorder/shard.hpp"
#include "shardorder/shelling.hpp"
#include "shardorder/sortable.hpp"

namespace shardorder {

using nlohmann::json;

std::vector<std::string> suite_names() {
  return {"roundtrip", "geometry", "el", "mobius", "sortable"};
}

int suite_cap(std::string_view suite) {
  if (suite == "roundtrip" || suite == "geometry") return 8;
  if (suite == "el") return 5;
  if (suite == "mobius" || suite == "sortable") return 6;
  if (suite == "all") return 5;
  fail(ErrorCode::kInvalidArgument, "unknown suite '" + std::string(suite) + "'");
}

json SuiteResult::to_json() const {
  return json{{"suite", suite},
              {"n", n},
              {"passed", passed},
              {"details", details},
              {"failures", failures}};
}

namespace {

// Keep reports readable when something is badly wrong.
constexpr std::size_t kMaxFailures = 20;

void note(SuiteResult& r, std::string message) {
  if (r.failures.size() < kMaxFailures) r.failures.push_back(std::move(message));
}

SuiteResult roundtrip(int n) {
  SuiteResult r{"roundtrip", n, false, json::object(), {}};
  std::size_t total = 0;
  std::size_t agreements = 0;
  for (const Permutation& p : all_permutations(n)) {
    ++total;
    const PermutationPreorder w = mu(p);
    if (!is_permutation_preorder(w.relation())) {
      note(r, "mu(" + p.to_string() + ") violates (P1)/(P2)");
      continue;
    }
    const Permutation back = lambda(w);
    if (back == p) {
      ++agreements;
    } else {
      note(r, "lambda(mu(" + p.to_string() + ")) = " + back.to_string());
    }
  }
  r.details = {{"permutations", total}, {"agreements", agreements}};
  r.passed = r.failures.empty();
  return r;
}

SuiteResult geometry(int n) {
  SuiteResult r{"geometry", n, false, json::object(), {}};
  std::size_t total = 0;
  std::size_t agreements = 0;
  std::set<Preorder> image;
  for (const Permutation& p : all_permutations(n)) {
    ++total;
    const auto shards = lower_shards(p);
    const Preorder cone = to_preorder(intersect(n, shards));
    const Preorder combinatorial = mu(p).relation();
    image.insert(combinatorial);
    if (cone == combinatorial) {
      ++agreements;
    } else {
      note(r, "shard cone of " + p.to_string() + " differs from mu");
    }
  }
  const auto shards = enumerate_shards(n);
  r.details = {{"permutations", total},
               {"agreements", agreements},
               {"shards", shards.size()},
               {"shard_count_formula", shard_count(n)}};
  if (shards.size() != shard_count(n)) note(r, "shard enumeration disagrees with count formula");
  if (n <= 4) {
    std::set<Preorder> psi;
    const std::size_t subsets = std::size_t{1} << shards.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::vector<Shard> chosen;
      for (std::size_t s = 0; s < shards.size(); ++s) {
        if ((mask >> s) & 1U) chosen.push_back(shards[s]);
      }
      psi.insert(to_preorder(intersect(n, chosen)));
    }
    r.details["shard_subsets"] = subsets;
    r.details["distinct_intersections"] = psi.size();
    if (psi != image) note(r, "intersections of shard subsets differ from the image of mu");
  }
  r.passed = r.failures.empty();
  return r;
}

SuiteResult el(int n) {
  SuiteResult r{"el", n, false, json::object(), {}};
  const OmegaLattice lat = OmegaLattice::build(n);
  const EdgeLabeling sigma(lat);
  std::size_t intervals = 0;
  for (std::size_t b = 0; b < lat.size(); ++b) {
    for (std::size_t t = 0; t < lat.size(); ++t) {
      if (!lat.leq(b, t)) continue;
      ++intervals;
      std::size_t increasing = 0;
      std::vector<std::size_t> increasing_path;
      std::vector<int> least;
      std::size_t least_hits = 0;
      for_each_maximal_chain(sigma, b, t, [&](auto path, auto labels) {
        const std::vector<int> word(labels.begin(), labels.end());
        if (std::is_sorted(word.begin(), word.end())) {
          ++increasing;
          increasing_path.assign(path.begin(), path.end());
        }
        if (least_hits == 0 || word < least) {
          least = word;
          least_hits = 1;
        } else if (word == least) {
          ++least_hits;
        }
      });
      const std::string tag = lat.word(b).to_string() + ".." + lat.word(t).to_string();
      if (increasing != 1) {
        note(r, tag + ": " + std::to_string(increasing) + " weakly increasing chains");
        continue;
      }
      const LabeledChain greedy = increasing_chain(lat.element(b), lat.element(t));
      std::vector<std::size_t> greedy_path;
      for (const auto& e : greedy.elements) greedy_path.push_back(lat.index_of(e));
      if (greedy_path != increasing_path) note(r, tag + ": greedy chain is not the increasing one");
      if (least_hits != 1 || greedy.labels != least) {
        note(r, tag + ": increasing chain is not the unique lexicographically least");
      }
    }
  }
  std::size_t full_increasing = 0;
  for_each_maximal_chain(sigma, lat.bottom(), lat.top(), [&](auto, auto labels) {
    if (std::is_sorted(labels.begin(), labels.end())) ++full_increasing;
  });
  r.details = {{"intervals", intervals},
               {"full_interval",
                {{"increasing_chains", full_increasing},
                 {"decreasing_chains", count_decreasing_chains(sigma, lat.bottom(), lat.top())}}}};
  r.passed = r.failures.empty();
  return r;
}

SuiteResult mobius_suite(int n) {
  SuiteResult r{"mobius", n, false, json::object(), {}};
  const OmegaLattice lat = OmegaLattice::build(n);
  const EdgeLabeling sigma(lat);
  std::size_t intervals = 0;
  // Every interval for small n; the whole lattice only beyond that.
  const bool all_intervals = n <= 5;
  for (std::size_t b = 0; b < lat.size(); ++b) {
    if (!all_intervals && b != lat.bottom()) continue;
    const std::vector<long long> row = mobius_row(lat, b);
    for (std::size_t t = 0; t < lat.size(); ++t) {
      if (!lat.leq(b, t)) continue;
      if (!all_intervals && t != lat.top()) continue;
      ++intervals;
      const long long chains = mobius_by_chains(sigma, b, t);
      if (chains != row[t]) {
        note(r, lat.word(b).to_string() + ".." + lat.word(t).to_string() + ": chains give " +
                    std::to_string(chains) + ", recursion gives " + std::to_string(row[t]));
      }
    }
  }
  const long long global = mobius_by_recursion(lat, lat.bottom(), lat.top());
  std::size_t indecomposable = 0;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (is_indecomposable(lat.word(i))) ++indecomposable;
  }
  if (static_cast<std::size_t>(global < 0 ? -global : global) != indecomposable) {
    note(r, "|mobius(0,1)| differs from the number of indecomposable permutations");
  }
  r.details = {{"intervals", intervals},
               {"mobius_bottom_top", global},
               {"indecomposable", indecomposable}};
  r.passed = r.failures.empty();
  return r;
}

unsigned long long catalan(int n) {
  unsigned long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * static_cast<unsigned long long>(k) + 1) / (k + 2);
  return c;
}

SuiteResult sortable(int n) {
  SuiteResult r{"sortable", n, false, json::object(), {}};
  std::vector<PermutationPreorder> omega;
  for (const Permutation& p : all_permutations(n)) omega.push_back(mu(p));
  std::size_t words = 0;
  for (const CoxeterElement& c : CoxeterElement::all(n)) {
    ++words;
    std::set<Preorder> from_sortables;
    for (const Permutation& p : c_sortables(c)) from_sortables.insert(mu(p).relation());
    std::set<Preorder> noncrossing;
    for (const auto& w : omega) {
      if (is_noncrossing_preorder(w, c)) noncrossing.insert(w.relation());
    }
    if (from_sortables != noncrossing) {
      note(r, "c = " + c.to_string() + ": sortable image differs from noncrossing pre-orders");
    }
    if (from_sortables.size() != catalan(n)) {
      note(r, "c = " + c.to_string() + ": " + std::to_string(from_sortables.size()) +
                  " sortables, expected " + std::to_string(catalan(n)));
    }
  }
  r.details = {{"coxeter_words", words}, {"catalan", catalan(n)}};
  r.passed = r.failures.empty();
  return r;
}

}  // namespace

std::vector<SuiteResult> run_suite(std::string_view suite, int n, bool force) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be positive");
  const int cap = suite_cap(suite);
  if (n > cap && !force) {
    fail(ErrorCode::kResource, "suite " + std::string(suite) + " is capped at n = " +
                                   std::to_string(cap));
  }
  std::vector<SuiteResult> out;
  auto want = [&](std::string_view name) { return suite == "all" || suite == name; };
  if (want("roundtrip")) out.push_back(roundtrip(n));
  if (want("geometry")) out.push_back(geometry(n));
  if (want("el")) out.push_back(el(n));
  if (want("mobius")) out.push_back(mobius_suite(n));
  if (want("sortable")) out.push_back(sortable(n));
  return out;
}

}  // namespace shardorder
