#include "shardorder/shardorder.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "shardorder/error.hpp"
#include "shardorder/formats.hpp"
#include "shardorder/lattice.hpp"
#include "shardorder/permutation.hpp"
#include "shardorder/preorder.hpp"
#include "shardorder/shard.hpp"
#include "shardorder/shelling.hpp"
#include "shardorder/sortable.hpp"
#include "shardorder/verify.hpp"

struct so_preorder {
  shardorder::PermutationPreorder value;
};

struct so_lattice {
  explicit so_lattice(shardorder::OmegaLattice l) : lattice(std::move(l)), sigma(lattice) {}
  shardorder::OmegaLattice lattice;
  shardorder::EdgeLabeling sigma;
};

namespace {

using namespace shardorder;

thread_local std::string g_last_error;

so_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return SO_INVALID_ARGUMENT;
    case ErrorCode::kParse: return SO_PARSE_ERROR;
    case ErrorCode::kDomain: return SO_DOMAIN_ERROR;
    case ErrorCode::kResource: return SO_RESOURCE_LIMIT;
    case ErrorCode::kInternal: return SO_INTERNAL_ERROR;
  }
  return SO_INTERNAL_ERROR;
}

template <typename F>
so_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return SO_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::parse_error& e) {
    g_last_error = e.what();
    return SO_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SO_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SO_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return SO_INTERNAL_ERROR;
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

CoxeterElement coxeter_from(int n, const char* text) {
  if (text == nullptr || *text == '\0') return CoxeterElement::ascending(n);
  return CoxeterElement::parse(n, text);
}

std::size_t endpoint(const OmegaLattice& lattice, const char* perm, std::size_t fallback) {
  if (perm == nullptr) return fallback;
  const Permutation p = Permutation::parse(perm);
  if (p.size() != lattice.n()) {
    fail(ErrorCode::kInvalidArgument, "endpoint " + p.to_string() + " is not in S_" +
                                          std::to_string(lattice.n()));
  }
  return lattice.index_of(p);
}

std::pair<std::size_t, std::size_t> interval_of(const so_lattice* l, const char* bottom,
                                                const char* top) {
  const std::size_t b = endpoint(l->lattice, bottom, l->lattice.bottom());
  const std::size_t t = endpoint(l->lattice, top, l->lattice.top());
  if (!l->lattice.leq(b, t)) {
    fail(ErrorCode::kDomain, l->lattice.word(b).to_string() + " is not below " +
                                 l->lattice.word(t).to_string());
  }
  return {b, t};
}

std::string shard_lines(const std::vector<Shard>& shards) {
  std::string text;
  for (const Shard& s : shards) text += s.to_string() + "\n";
  return text;
}

}  // namespace

extern "C" {

const char* so_last_error(void) { return g_last_error.c_str(); }

const char* so_status_name(so_status status) {
  switch (status) {
    case SO_OK: return "ok";
    case SO_INVALID_ARGUMENT: return "invalid argument";
    case SO_PARSE_ERROR: return "parse error";
    case SO_DOMAIN_ERROR: return "domain error";
    case SO_RESOURCE_LIMIT: return "resource limit";
    case SO_INTERNAL_ERROR: return "internal error";
    case SO_NULL_POINTER: return "null pointer";
  }
  return "unknown status";
}

void so_string_free(char* s) { std::free(s); }

so_status so_preorder_from_permutation(const char* perm, so_preorder** out) {
  if (perm == nullptr || out == nullptr) return SO_NULL_POINTER;
  return guarded([&] { *out = new so_preorder{mu(Permutation::parse(perm))}; });
}

so_status so_preorder_from_json(const char* json, so_preorder** out) {
  if (json == nullptr || out == nullptr) return SO_NULL_POINTER;
  return guarded([&] {
    *out = new so_preorder{preorder_from_json(nlohmann::json::parse(json))};
  });
}

void so_preorder_free(so_preorder* w) { delete w; }

so_status so_preorder_size(const so_preorder* w, int* out) {
  if (w == nullptr || out == nullptr) return SO_NULL_POINTER;
  *out = w->value.size();
  return SO_OK;
}

so_status so_preorder_block_count(const so_preorder* w, int* out) {
  if (w == nullptr || out == nullptr) return SO_NULL_POINTER;
  *out = w->value.block_count();
  return SO_OK;
}

so_status so_preorder_leq(const so_preorder* a, const so_preorder* b, int* out) {
  if (a == nullptr || b == nullptr || out == nullptr) return SO_NULL_POINTER;
  return guarded([&] {
    if (a->value.size() != b->value.size()) {
      fail(ErrorCode::kInvalidArgument, "pre-orders have different sizes");
    }
    *out = leq(a->value, b->value) ? 1 : 0;
  });
}

so_status so_preorder_to_json(const so_preorder* w, char** out) {
  if (w == nullptr || out == nullptr) return SO_NULL_POINTER;
  return guarded([&] { *out = copy_out(preorder_to_json(w->value).dump()); });
}

so_status so_preorder_to_permutation(const so_preorder* w, char** out) {
  if (w == nullptr || out == nullptr) return SO_NULL_POINTER;
  return guarded([&] { *out = copy_out(lambda(w->value).to_string()); });
}

so_status so_shards_all(int n, char** out) {
  if (out == nullptr) return SO_NULL_POINTER;
  return guarded([&] { *out = copy_out(shard_lines(enumerate_shards(n))); });
}

so_status so_shards_lower(const char* perm, char** out) {
  if (perm == nullptr || out == nullptr) return SO_NULL_POINTER;
  return guarded([&] { *out = copy_out(shard_lines(lower_shards(Permutation::parse(perm)))); });
}

so_status so_lattice_build(int n, int force, so_lattice** out) {
  if (out == nullptr) return SO_NULL_POINTER;
  return guarded([&] {
    const int cap = force ? kMaxN : kDefaultLatticeCap;
    *out = new so_lattice(OmegaLattice::build(n, cap));
  });
}

void so_lattice_free(so_lattice* lattice) { delete lattice; }

so_status so_lattice_size(const so_lattice* lattice, size_t* out) {
  if (lattice == nullptr || out == nullptr) return SO_NULL_POINTER;
  *out = lattice->lattice.size();
  return SO_OK;
}

so_status so_lattice_edge_count(const so_lattice* lattice, size_t* out) {
  if (lattice == nullptr || out == nullptr) return SO_NULL_POINTER;
  *out = lattice->lattice.edge_count();
  return SO_OK;
}

so_status so_lattice_export(const so_lattice* lattice, const char* format, char** out) {
  if (lattice == nullptr || format == nullptr || out == nullptr) return SO_NULL_POINTER;
  return guarded([&] {
    const std::string f = format;
    if (f == "dot") {
      *out = copy_out(hasse_dot(lattice->lattice));
    } else if (f == "json") {
      *out = copy_out(hasse_json(lattice->lattice).dump());
    } else if (f == "text") {
      *out = copy_out(hasse_text(lattice->lattice));
    } else {
      fail(ErrorCode::kInvalidArgument, "unknown format '" + f + "'");
    }
  });
}

so_status so_lattice_mobius(const so_lattice* lattice, const char* bottom, const char* top,
                            long long* out) {
  if (lattice == nullptr || out == nullptr) return SO_NULL_POINTER;
  return guarded([&] {
    const auto [b, t] = interval_of(lattice, bottom, top);
    *out = mobius(lattice->sigma, b, t);
  });
}

so_status so_lattice_chain_report(const so_lattice* lattice, const char* bottom, const char* top,
                                  char** out) {
  if (lattice == nullptr || out == nullptr) return SO_NULL_POINTER;
  return guarded([&] {
    const auto [b, t] = interval_of(lattice, bottom, top);
    *out = copy_out(chain_report_json(chain_report(lattice->sigma, b, t)).dump());
  });
}

so_status so_is_c_sortable(const char* perm, const char* coxeter, int* out) {
  if (perm == nullptr || out == nullptr) return SO_NULL_POINTER;
  return guarded([&] {
    const Permutation p = Permutation::parse(perm);
    *out = is_c_sortable(p, coxeter_from(p.size(), coxeter)) ? 1 : 0;
  });
}

so_status so_c_sortables(int n, const char* coxeter, char** out) {
  if (out == nullptr) return SO_NULL_POINTER;
  return guarded([&] {
    nlohmann::json list = nlohmann::json::array();
    for (const Permutation& p : c_sortables(coxeter_from(n, coxeter))) list.push_back(p.to_string());
    *out = copy_out(list.dump());
  });
}

so_status so_is_noncrossing(const so_preorder* w, const char* coxeter, int* out) {
  if (w == nullptr || out == nullptr) return SO_NULL_POINTER;
  return guarded([&] {
    *out = is_noncrossing_preorder(w->value, coxeter_from(w->value.size(), coxeter)) ? 1 : 0;
  });
}

so_status so_noncrossing_all(int n, const char* coxeter, char** out) {
  if (out == nullptr) return SO_NULL_POINTER;
  return guarded([&] {
    const CoxeterElement c = coxeter_from(n, coxeter);
    nlohmann::json list = nlohmann::json::array();
    for (const Permutation& p : all_permutations(n)) {
      const PermutationPreorder w = mu(p);
      if (is_noncrossing_preorder(w, c)) list.push_back(preorder_to_json(w));
    }
    *out = copy_out(list.dump());
  });
}

so_status so_noncrossing_from_partition(const char* json, char** out) {
  if (json == nullptr || out == nullptr) return SO_NULL_POINTER;
  return guarded([&] {
    const PartitionInput in = partition_from_json(nlohmann::json::parse(json));
    const PermutationPreorder w = noncrossing_order_of_partition(in.blocks, in.coxeter);
    *out = copy_out(preorder_to_json(w).dump());
  });
}

so_status so_verify(const char* suite, int n, int force, char** out, int* passed) {
  if (suite == nullptr || out == nullptr || passed == nullptr) return SO_NULL_POINTER;
  return guarded([&] {
    nlohmann::json reports = nlohmann::json::array();
    bool ok = true;
    for (const SuiteResult& r : run_suite(suite, n, force != 0)) {
      ok = ok && r.passed;
      reports.push_back(r.to_json());
    }
    *out = copy_out(reports.dump(2));
    *passed = ok ? 1 : 0;
  });
}

}  // extern "C"
