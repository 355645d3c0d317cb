#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace verlag {

// Structured error codes shared across the library.
enum class Errc {
  PrimeRequired,
  KOutOfRange,
  ExponentOutOfRange,
  ALeadingZero,
  InvalidTwoFamily,
  IndexRangeViolation,
  OutOfOracleScope,
  InconsistentPresentation,
  GroupMismatch,
  IndexOutOfRange,
  OutOfTheoremScope,
  KernelNotSubgroup,
  AmbiguousKernel,
  NotTerminal,
  NotInSectionD,
  UnsupportedPrimeForLabels,
  DegreeMismatch,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct ValidationError {
  Errc code;
  std::string message;
};

// Value-or-error result for the validators: every integer input yields either
// a validated value or a structured error naming the violated constraint.
template <typename T>
class Validated {
 public:
  Validated(T value) : state_(std::move(value)) {}
  Validated(Errc code, std::string message)
      : state_(ValidationError{code, std::move(message)}) {}

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }
  const T& value() const { return std::get<T>(state_); }
  const ValidationError& error() const { return std::get<ValidationError>(state_); }

  // Throwing accessor for call sites that have already checked their inputs.
  const T& expect() const {
    if (!ok()) throw Error(error().code, error().message);
    return value();
  }

 private:
  std::variant<T, ValidationError> state_;
};

}  // namespace verlag
