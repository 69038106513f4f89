#pragma once

#include <stdexcept>
#include <string>

namespace qloop {

enum class ErrorKind {
  NotSquare,
  EntryOutOfRange,
  NotLatin,
  IdentityNotFirst,
  NotASubloop,
  NotNormal,
  DegreeMismatch,
  PreconditionViolated,
  SyntaxError,
  UnknownToken,
  UnboundVariable,
  ParseError,
  InternalInconsistency,
  IsoVerificationFailed,
  UsageError,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; `kind()` distinguishes the cases
// callers are expected to react to.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qloop
