#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace shardorder {

/// Suites: "roundtrip", "geometry", "el", "mobius", "sortable", or "all".
std::vector<std::string> suite_names();

/// Largest n a suite accepts without forcing.
int suite_cap(std::string_view suite);

struct SuiteResult {
  std::string suite;
  int n = 0;
  bool passed = false;
  nlohmann::json details;
  std::vector<std::string> failures;

  nlohmann::json to_json() const;
};

/// Runs one suite (or every suite for "all") at size n. Throws
/// Error(kInvalidArgument) for unknown suites and Error(kResource) when n is
/// above the cap and `force` is false.
std::vector<SuiteResult> run_suite(std::string_view suite, int n, bool force = false);

}  // namespace shardorder
