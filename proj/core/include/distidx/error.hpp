#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace distidx {

enum class ErrorCode {
  kInvalidEdge,
  kIndexOutOfRange,
  kNotConnected,
  kNoSuchEdge,
  kTooSmall,
  kTooLarge,
  kWeightDomainExceeded,
  kInvalidWeight,
  kInvalidOrder,
  kInvalidMatching,
  kInvalidAlpha,
  kNotATree,
  kInvalidTarget,
  kNoMoveAvailable,
  kEmptyFamily,
  kBadEncoding,
  kOverflow,
  kUsage,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace distidx
