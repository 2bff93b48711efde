#pragma once

#include <stdexcept>
#include <string>

namespace grothring {

enum class ErrorKind {
  MalformedElement,
  UnsupportedFamily,
  MissingOrder,
  StrategyUnavailable,
  InvalidInput,
  Precondition,
  NotHomogeneous,
  ZeroHasNoDegree,
  UndecidableConfiguration,
  OracleRequired,
  MalformedDenominator,
  BaseMismatch,
  AxiomViolation,
  Torsion,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. The kind is stable and is what
/// tests and the CLI dispatch on; the message is for humans.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace grothring
