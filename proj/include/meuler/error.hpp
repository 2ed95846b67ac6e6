// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEULER_ERROR_HPP_
#define MEULER_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace meuler {

enum class ErrorCode {
  kEmptyInput,
  kBasisExchangeViolation,
  kLoopDetected,
  kRankOutOfRange,
  kNonPrimeQ,
  kOverlapViolation,
  kSizeViolation,
  kNotAFlat,
  kRankCollapse,
  kGroundSetTooLarge,
  kInvalidMatroid,
  kVOutOfRange,
  kCompositionMismatch,
  kPreconditionViolation,
  kRankTooSmall,
  kExponentMismatch,
  kNotPMD,
  kNotLopsided,
  kSingularSystem,
  kDivisionNotExact,
  kParseError,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kBasisExchangeViolation: return "BasisExchangeViolation";
    case ErrorCode::kLoopDetected: return "LoopDetected";
    case ErrorCode::kRankOutOfRange: return "RankOutOfRange";
    case ErrorCode::kNonPrimeQ: return "NonPrimeQ";
    case ErrorCode::kOverlapViolation: return "OverlapViolation";
    case ErrorCode::kSizeViolation: return "SizeViolation";
    case ErrorCode::kNotAFlat: return "NotAFlat";
    case ErrorCode::kRankCollapse: return "RankCollapse";
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kInvalidMatroid: return "InvalidMatroid";
    case ErrorCode::kVOutOfRange: return "VOutOfRange";
    case ErrorCode::kCompositionMismatch: return "CompositionMismatch";
    case ErrorCode::kPreconditionViolation: return "PreconditionViolation";
    case ErrorCode::kRankTooSmall: return "RankTooSmall";
    case ErrorCode::kExponentMismatch: return "ExponentMismatch";
    case ErrorCode::kNotPMD: return "NotPMD";
    case ErrorCode::kNotLopsided: return "NotLopsided";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kDivisionNotExact: return "DivisionNotExact";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace meuler

#endif  // MEULER_ERROR_HPP_
