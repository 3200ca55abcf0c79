#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tetra {

enum class ErrorCode {
  kRingMismatch,
  kDivisionByZero,
  kInverseUnavailable,
  kUnsupportedRing,
  kInvalidPrime,
  kShapeMismatch,
  kIndexOutOfScope,
  kBackendMismatch,
  kDegreeMismatch,
  kArityMismatch,
  kUnknownGenerator,
  kInvalidSignature,
  kMissingAssignment,
  kInvalidDegree,
  kIndexOutOfDomain,
  kUnknownLaw,
  kBadConfig,
  kSyntaxError,
  kDegreeError,
  kIndexError,
  kUnboundSymbol,
  kParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above, so
/// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tetra
