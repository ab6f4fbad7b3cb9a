#pragma once

#include <stdexcept>
#include <string>

namespace ccx {

// Typed failure classes. Validation-style failures carry one of these kinds so
// callers (and the CLI) can react without string matching.
enum class ErrorKind {
  ParityViolation,    // odd corner sum at some triangle
  CornerNegative,     // triangle inequality broken at some corner
  Disconnected,       // traced multicurve has != 1 component where 1 expected
  Peripheral,         // curve isotopic to a puncture/boundary link
  NullHomotopic,      // zero vector / trivial loop
  IncompatibleTriangulation,  // coordinate length mismatch etc.
  ComplexityTooLow,   // surface with xi(S) < 1 where a curve system is needed
  Unsupported,        // out of scope (e.g. closed surfaces, missing half-twist)
  DoesNotCut,         // projection of a curve disjoint from the subsurface
  NotPantsCurve,      // half-twist requested about a non-pants curve
  TruncationExhausted,// search window exhausted without a certified answer
  Unreachable,        // truncated universe disconnected for the given radius
  BadInput,           // malformed CLI/config input
  WrongComplexity,    // slope coordinates requested off the Farey surfaces
  VertexMissesZ,      // projection input does not cut the subsurface
  NotFound,           // lookup failed (curve outside a universe, etc.)
  BaseNotPants,       // marking base is not a pants decomposition
  TransversalOutsideXa, // transversal leaves the piece around its base curve
  TransversalNotMinimal,// transversal crosses its base curve non-minimally
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::CornerNegative: return "CornerNegative";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::Peripheral: return "Peripheral";
    case ErrorKind::NullHomotopic: return "NullHomotopic";
    case ErrorKind::IncompatibleTriangulation: return "IncompatibleTriangulation";
    case ErrorKind::ComplexityTooLow: return "ComplexityTooLow";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::DoesNotCut: return "DoesNotCut";
    case ErrorKind::NotPantsCurve: return "NotPantsCurve";
    case ErrorKind::TruncationExhausted: return "TruncationExhausted";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::WrongComplexity: return "WrongComplexity";
    case ErrorKind::VertexMissesZ: return "VertexMissesZ";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::BaseNotPants: return "BaseNotPants";
    case ErrorKind::TransversalOutsideXa: return "TransversalOutsideXa";
    case ErrorKind::TransversalNotMinimal: return "TransversalNotMinimal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ccx
