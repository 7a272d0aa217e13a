#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bigwitt {

enum class ErrorKind {
  InvalidInput,
  NonUnit,
  EmptyInput,
  ExtensionBoundExceeded,
  ShapeMismatch,
  NonUnitConstantTerm,
  NotExact,
  NilpotentCoefficients,
  NonIntegral,
  NotNilpotent,
  NotAUnit,
  UnstableTruncation,
  InsufficientPrecision,
  InvalidTruncation,
  NotClosed,
  NotAbelian,
  TooLarge,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace bigwitt
