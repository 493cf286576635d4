#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quatseq {

enum class ErrorCode {
  InvalidArgument,
  InvalidParameters,
  NoParameters,
  NotCoprime,
  NotAUnit,
  NotIrreducible,
  RingMismatch,
  NotADivisor,
  NotInSubring,
  OrderUnavailable,
  OrderMismatch,
  NotScalar,
  DimensionMismatch,
  Unsupported,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (CLI exit codes, Python exceptions) can dispatch without parsing
/// the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quatseq
