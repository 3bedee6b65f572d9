#pragma once

#include <stdexcept>
#include <string>

namespace shardorder {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kDomain,
  kResource,
  // A structural guarantee failed to hold; indicates a bug, never bad input.
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace shardorder
