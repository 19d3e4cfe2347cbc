#include "stablecore/error.hpp"

namespace stablecore {

const char* ErrorCodeName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kEmptyResult: return "EmptyResult";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kNotStable: return "NotStable";
    case ErrorCode::kNotPendant: return "NotPendant";
    case ErrorCode::kScaleExceeded: return "ScaleExceeded";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace stablecore
