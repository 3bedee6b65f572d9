#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "shardorder/shardorder.h"

namespace {

constexpr int kLatticeCap = 7;
constexpr int kElementCap = 9;

constexpr int kExitFailedCheck = 1;
constexpr int kExitError = 2;

struct CliError {
  std::string message;
};

struct Owned {
  char* ptr = nullptr;
  ~Owned() { so_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

using PreorderPtr = std::unique_ptr<so_preorder, decltype(&so_preorder_free)>;
using LatticePtr = std::unique_ptr<so_lattice, decltype(&so_lattice_free)>;

void check(so_status status) {
  if (status != SO_OK) {
    std::string what = so_last_error();
    if (what.empty()) what = so_status_name(status);
    throw CliError{what};
  }
}

struct Options {
  int n = 0;
  std::string format;
  std::string coxeter;
  std::optional<std::string> bottom;
  std::optional<std::string> top;
  std::string out;
  bool force = false;
  std::string perm;
  std::string input;
  std::string suite = "all";
};

void require_cap(int n, int cap, const Options& o, const char* what) {
  if (n < 1) throw CliError{"--n must be at least 1"};
  if (n > cap && !o.force) {
    throw CliError{std::string(what) + " is limited to n <= " + std::to_string(cap) +
                   "; pass --force to override"};
  }
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw CliError{"unsupported --format '" + o.format + "' for this command"};
}

void emit(const Options& o, std::string text) {
  if (text.empty() || text.back() != '\n') text.push_back('\n');
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw CliError{"cannot open '" + o.out + "' for writing"};
  file << text;
  if (!file) throw CliError{"failed writing '" + o.out + "'"};
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw CliError{"cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

const char* c_str_or_null(const std::optional<std::string>& s) {
  return s ? s->c_str() : nullptr;
}

const char* coxeter_arg(const Options& o) { return o.coxeter.empty() ? nullptr : o.coxeter.c_str(); }

PreorderPtr preorder_of(const std::string& perm) {
  so_preorder* raw = nullptr;
  check(so_preorder_from_permutation(perm.c_str(), &raw));
  return PreorderPtr(raw, so_preorder_free);
}

int size_of(const so_preorder* w) {
  int n = 0;
  check(so_preorder_size(w, &n));
  return n;
}

LatticePtr lattice_of(const Options& o) {
  require_cap(o.n, kLatticeCap, o, "this command");
  so_lattice* raw = nullptr;
  check(so_lattice_build(o.n, o.force ? 1 : 0, &raw));
  return LatticePtr(raw, so_lattice_free);
}

int cmd_map(const Options& o) {
  require_format(o, {"json"});
  auto w = preorder_of(o.perm);
  require_cap(size_of(w.get()), kElementCap, o, "map");
  Owned json;
  check(so_preorder_to_json(w.get(), &json.ptr));
  emit(o, json.str());
  return 0;
}

int cmd_unmap(const Options& o) {
  require_format(o, {"text"});
  const std::string doc = read_input(o.input);
  so_preorder* raw = nullptr;
  check(so_preorder_from_json(doc.c_str(), &raw));
  PreorderPtr w(raw, so_preorder_free);
  require_cap(size_of(w.get()), kElementCap, o, "unmap");
  Owned perm;
  check(so_preorder_to_permutation(w.get(), &perm.ptr));
  emit(o, perm.str());
  return 0;
}

std::string lines_to_json(const std::string& lines) {
  std::string out = "[";
  std::istringstream in(lines);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out += first ? "\"" : ",\"";
    out += line + "\"";
    first = false;
  }
  return out + "]";
}

int cmd_shards(const Options& o) {
  require_format(o, {"text", "json"});
  Owned text;
  if (!o.perm.empty()) {
    auto w = preorder_of(o.perm);
    require_cap(size_of(w.get()), kElementCap, o, "shards");
    check(so_shards_lower(o.perm.c_str(), &text.ptr));
  } else {
    require_cap(o.n, kElementCap, o, "shards");
    check(so_shards_all(o.n, &text.ptr));
  }
  const std::string lines = text.str();
  emit(o, o.format == "json" ? lines_to_json(lines) : lines);
  return 0;
}

int cmd_hasse(const Options& o) {
  require_format(o, {"dot", "json", "text"});
  auto lattice = lattice_of(o);
  Owned text;
  check(so_lattice_export(lattice.get(), o.format.c_str(), &text.ptr));
  emit(o, text.str());
  return 0;
}

int cmd_mobius(const Options& o) {
  require_format(o, {"text", "json"});
  auto lattice = lattice_of(o);
  long long value = 0;
  check(so_lattice_mobius(lattice.get(), c_str_or_null(o.bottom), c_str_or_null(o.top), &value));
  if (o.format == "json") {
    emit(o, "{\"mobius\":" + std::to_string(value) + "}");
  } else {
    emit(o, std::to_string(value));
  }
  return 0;
}

int cmd_chains(const Options& o) {
  require_format(o, {"json"});
  auto lattice = lattice_of(o);
  Owned json;
  check(so_lattice_chain_report(lattice.get(), c_str_or_null(o.bottom), c_str_or_null(o.top),
                                &json.ptr));
  emit(o, json.str());
  return 0;
}

int cmd_sortable(const Options& o) {
  require_format(o, {"json", "text"});
  if (!o.perm.empty()) {
    auto w = preorder_of(o.perm);
    require_cap(size_of(w.get()), kElementCap, o, "sortable");
    int yes = 0;
    check(so_is_c_sortable(o.perm.c_str(), coxeter_arg(o), &yes));
    emit(o, o.format == "json" ? (yes ? "true" : "false") : (yes ? "sortable" : "not sortable"));
    return 0;
  }
  require_cap(o.n, kLatticeCap, o, "sortable");
  Owned json;
  check(so_c_sortables(o.n, coxeter_arg(o), &json.ptr));
  if (o.format == "json") {
    emit(o, json.str());
    return 0;
  }
  std::string text;
  for (char ch : json.str()) {
    if (ch == ',') text.push_back('\n');
    else if (ch != '[' && ch != ']' && ch != '"') text.push_back(ch);
  }
  emit(o, text);
  return 0;
}

int cmd_noncrossing(const Options& o) {
  require_format(o, {"json"});
  Owned json;
  if (!o.input.empty()) {
    check(so_noncrossing_from_partition(read_input(o.input).c_str(), &json.ptr));
  } else if (!o.perm.empty()) {
    auto w = preorder_of(o.perm);
    require_cap(size_of(w.get()), kElementCap, o, "noncrossing");
    int yes = 0;
    check(so_is_noncrossing(w.get(), coxeter_arg(o), &yes));
    emit(o, yes ? "true" : "false");
    return 0;
  } else {
    require_cap(o.n, kLatticeCap, o, "noncrossing");
    check(so_noncrossing_all(o.n, coxeter_arg(o), &json.ptr));
  }
  emit(o, json.str());
  return 0;
}

int cmd_verify(const Options& o) {
  require_format(o, {"json"});
  if (o.n < 1) throw CliError{"--n must be at least 1"};
  Owned json;
  int passed = 0;
  check(so_verify(o.suite.c_str(), o.n, o.force ? 1 : 0, &json.ptr, &passed));
  emit(o, json.str());
  return passed ? 0 : kExitFailedCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shard intersection order on permutations"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    sub->add_flag("--force", o.force, "Ignore the size limits");
  };
  auto add_format = [&](CLI::App* sub, const char* fallback) {
    o.format.clear();
    sub->add_option("--format", o.format, "Output format")->default_str(fallback);
  };
  auto add_coxeter = [&](CLI::App* sub) {
    sub->add_option("--coxeter", o.coxeter, "Coxeter word, e.g. 2,1,3 (default 1,2,...,n-1)");
  };
  auto add_interval = [&](CLI::App* sub) {
    sub->add_option("--bottom", o.bottom, "Lower endpoint as a permutation (default: bottom)");
    sub->add_option("--top", o.top, "Upper endpoint as a permutation (default: top)");
  };

  std::map<CLI::App*, std::pair<int (*)(const Options&), const char*>> handlers;

  auto* map = app.add_subcommand("map", "Permutation to pre-order JSON");
  map->add_option("perm", o.perm, "Permutation")->required();
  add_format(map, "json");
  add_out(map);
  handlers[map] = {cmd_map, "json"};

  auto* unmap = app.add_subcommand("unmap", "Pre-order JSON to permutation");
  unmap->add_option("file", o.input, "Pre-order JSON file, '-' for stdin");
  add_format(unmap, "text");
  add_out(unmap);
  handlers[unmap] = {cmd_unmap, "text"};

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the lattice");
  hasse->add_option("--n", o.n, "Size")->required();
  add_format(hasse, "dot");
  add_out(hasse);
  handlers[hasse] = {cmd_hasse, "dot"};

  auto* shards = app.add_subcommand("shards", "All shards for --n, or the lower shards of a permutation");
  shards->add_option("perm", o.perm, "Permutation");
  shards->add_option("--n", o.n, "Size");
  add_format(shards, "text");
  add_out(shards);
  handlers[shards] = {cmd_shards, "text"};

  auto* mob = app.add_subcommand("mobius", "Möbius number of an interval");
  mob->add_option("--n", o.n, "Size")->required();
  add_interval(mob);
  add_format(mob, "text");
  add_out(mob);
  handlers[mob] = {cmd_mobius, "text"};

  auto* chains = app.add_subcommand("chains", "Chain report of an interval");
  chains->add_option("--n", o.n, "Size")->required();
  add_interval(chains);
  add_format(chains, "json");
  add_out(chains);
  handlers[chains] = {cmd_chains, "json"};

  auto* sortable = app.add_subcommand("sortable", "List c-sortable permutations or test one");
  sortable->add_option("perm", o.perm, "Permutation to test");
  sortable->add_option("--n", o.n, "Size");
  add_coxeter(sortable);
  add_format(sortable, "json");
  add_out(sortable);
  handlers[sortable] = {cmd_sortable, "json"};

  auto* nc = app.add_subcommand("noncrossing",
                                "List c-noncrossing pre-orders, test one, or orient a partition");
  nc->add_option("--perm", o.perm, "Test mu of this permutation");
  nc->add_option("--partition", o.input, "Partition JSON file, '-' for stdin");
  nc->add_option("--n", o.n, "Size");
  add_coxeter(nc);
  add_format(nc, "json");
  add_out(nc);
  handlers[nc] = {cmd_noncrossing, "json"};

  auto* verify = app.add_subcommand("verify", "Run oracle suites");
  verify->add_option("--n", o.n, "Size")->required();
  verify->add_option("--suite", o.suite, "roundtrip, geometry, el, mobius, sortable or all")
      ->check(CLI::IsMember(std::vector<std::string>{"roundtrip", "geometry", "el", "mobius", "sortable", "all"}));
  add_format(verify, "json");
  add_out(verify);
  handlers[verify] = {cmd_verify, "json"};

  auto* el = app.add_subcommand("el-verify", "Same as verify --suite el");
  el->add_option("--n", o.n, "Size")->required();
  add_format(el, "json");
  add_out(el);
  handlers[el] = {cmd_verify, "json"};

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    for (auto& [sub, handler] : handlers) {
      if (!sub->parsed()) continue;
      if (o.format.empty()) o.format = handler.second;
      if (sub == el) o.suite = "el";
      if ((sub == shards || sub == sortable) && o.perm.empty() && o.n == 0) {
        throw CliError{"give a permutation or --n"};
      }
      return handler.first(o);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
