#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsi {

enum class ErrorCode {
  kMalformedHeader,
  kSizeMismatch,
  kNonFiniteSample,
  kNonIncreasingWavelengths,
  kIo,
  kInvalidArgument,
  kOutOfRange,
  kDimensionMismatch,
  kMissingClass,
  kEmptyInput,
  kConfigNotFound,
  kConfigInvalid,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedHeader: return "malformed header";
    case ErrorCode::kSizeMismatch: return "size mismatch";
    case ErrorCode::kNonFiniteSample: return "non-finite sample";
    case ErrorCode::kNonIncreasingWavelengths: return "non-increasing wavelengths";
    case ErrorCode::kIo: return "i/o failure";
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kOutOfRange: return "out of range";
    case ErrorCode::kDimensionMismatch: return "dimension mismatch";
    case ErrorCode::kMissingClass: return "missing class";
    case ErrorCode::kEmptyInput: return "empty input";
    case ErrorCode::kConfigNotFound: return "config not found";
    case ErrorCode::kConfigInvalid: return "config invalid";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the categories above so
/// callers (and the CLI exit path) can branch on the kind of failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace hsi
