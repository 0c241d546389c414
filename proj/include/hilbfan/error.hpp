#pragma once

#include <stdexcept>
#include <string>

namespace hilbfan {

enum class ErrorCode {
  parse = 1,
  domain,
  dimension,
  rank,
  unsupported,
  precondition,
  internal,
};

/// Exception carried by every failing operation of the library. The code is
/// what the C API hands back across the ABI boundary.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace hilbfan
