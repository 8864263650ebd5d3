#pragma once

#include <stdexcept>
#include <string>

namespace cheby {

// Error conditions surfaced by the library. Verdict-style outcomes
// (violation witnesses, "not certified", budget exhaustion) are ordinary
// return values; exceptions are reserved for contract violations.
enum class ErrorCode {
  ParseError,
  IoError,
  NonPositiveSide,
  TriangleInequalityViolated,
  DegenerateTriangleUnsupported,
  NonPositiveScale,
  DuplicatePoint,
  ZeroDistance,
  ZeroDistanceWithNonemptyColoring,
  BadColoring,
  DegenerateDiagonalRoute,
  EmptyGrid,
  PairDoesNotMatchCase,
  HypothesisViolated,
  NonIntegralSides,
  ProductNotCopyFree,
  Overflow,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NonPositiveSide: return "NonPositiveSide";
    case ErrorCode::TriangleInequalityViolated: return "TriangleInequalityViolated";
    case ErrorCode::DegenerateTriangleUnsupported: return "DegenerateTriangleUnsupported";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::ZeroDistance: return "ZeroDistance";
    case ErrorCode::ZeroDistanceWithNonemptyColoring: return "ZeroDistanceWithNonemptyColoring";
    case ErrorCode::BadColoring: return "BadColoring";
    case ErrorCode::DegenerateDiagonalRoute: return "DegenerateDiagonalRoute";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::PairDoesNotMatchCase: return "PairDoesNotMatchCase";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NonIntegralSides: return "NonIntegralSides";
    case ErrorCode::ProductNotCopyFree: return "ProductNotCopyFree";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "UnknownError";
}

}  // namespace cheby
