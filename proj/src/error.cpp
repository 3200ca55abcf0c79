#include "tetra/error.hpp"

namespace tetra {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRingMismatch: return "RingMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kInverseUnavailable: return "InverseUnavailable";
    case ErrorCode::kUnsupportedRing: return "UnsupportedRing";
    case ErrorCode::kInvalidPrime: return "InvalidPrime";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kIndexOutOfScope: return "IndexOutOfScope";
    case ErrorCode::kBackendMismatch: return "BackendMismatch";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kUnknownGenerator: return "UnknownGenerator";
    case ErrorCode::kInvalidSignature: return "InvalidSignature";
    case ErrorCode::kMissingAssignment: return "MissingAssignment";
    case ErrorCode::kInvalidDegree: return "InvalidDegree";
    case ErrorCode::kIndexOutOfDomain: return "IndexOutOfDomain";
    case ErrorCode::kUnknownLaw: return "UnknownLaw";
    case ErrorCode::kBadConfig: return "BadConfig";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kDegreeError: return "DegreeError";
    case ErrorCode::kIndexError: return "IndexError";
    case ErrorCode::kUnboundSymbol: return "UnboundSymbol";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace tetra
