#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stablecore {

// Numeric values are shared with the C API status codes.
enum class ErrorCode : int {
  kOk = 0,
  kNotATree = 1,
  kOutOfRange = 2,
  kTooSmall = 3,
  kTooLarge = 4,
  kEmptyResult = 5,
  kLimitExceeded = 6,
  kNotStable = 7,
  kNotPendant = 8,
  kScaleExceeded = 9,
  kParseError = 10,
  kInvalidArgument = 11,
  kIo = 12,
  kInternal = 13,
};

const char* ErrorCodeName(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by enumerations that would produce more than the caller's limit.
// `count()` is the true number of objects as a decimal string (it may not
// fit in 64 bits).
class LimitExceeded : public Error {
 public:
  LimitExceeded(std::string count, const std::string& message)
      : Error(ErrorCode::kLimitExceeded, message), count_(std::move(count)) {}

  const std::string& count() const noexcept { return count_; }

 private:
  std::string count_;
};

// Parse failures carry the 1-based line where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace stablecore
