#pragma once

#include <stdexcept>
#include <string>

namespace bracekit {

enum class ErrorKind {
  NotLatinSquare,
  NotAssociative,
  IdentityNotZero,
  IndexOutOfRange,
  NotNormal,
  DistributivityFails,
  IdentityMismatch,
  BadCyclicParameter,
  NotAnIdeal,
  InvalidSubset,
  GapViolation,
  OrderCapExceeded,
  ParseError,
};

const char* to_string(ErrorKind kind);

class BraceError : public std::runtime_error {
 public:
  BraceError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bracekit
