#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spancol {

enum class ErrorKind {
  NotPrime,
  NotPrimePower,
  OrderTooLarge,
  MixedAmbient,
  CapExceeded,
  IndexOutOfRange,
  SelfLoop,
  MalformedColouring,
  InvalidColouring,
  NoExtension,
  NameClash,
  BadDegrees,
  ContextMismatch,
  NotASimplex,
  DimensionMismatch,
  NotAnG,
  Sq4NotInPrincipalIdeal,
  ExtractionInvalid,
  BadPrime,
  WrongShape,
  NotAPartition,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this one exception type; the
// kind is what callers (and the CLI exit-code mapping) switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spancol
