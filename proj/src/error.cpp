#include "bigwitt/error.hpp"

namespace bigwitt {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ExtensionBoundExceeded: return "ExtensionBoundExceeded";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::NilpotentCoefficients: return "NilpotentCoefficients";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::UnstableTruncation: return "UnstableTruncation";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::InvalidTruncation: return "InvalidTruncation";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace bigwitt
