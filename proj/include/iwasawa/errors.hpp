#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iwasawa {

enum class ErrorKind {
  InvalidContext,
  InvalidInput,
  NonUnit,
  PrecisionLoss,
  RamifiedRoot,
  NoResidueRoot,
  WildExponent,
  ZeroAtPrecision,
  InsufficientDegree,
  NotDistinguished,
  NotTopologicallyNilpotent,
  ZeroDivisor,
  PrecisionAmbiguous,
  NotTorsion,
  SizeLimit,
  NotTorsionAfterSpecialization,
  BoundExceeded,
  PreconditionViolation,
  BadResidueCharacteristic,
  NotProjector,
  EntryNotDivisible,
  NotPerfectPower,
  IrregularAtPrecision,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind so
// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The description without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace iwasawa
