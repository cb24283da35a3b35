#pragma once

#include <stdexcept>
#include <string>

namespace tfnp {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric argument fell outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Widths, arities or variants do not line up.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A document could not be decoded; `location()` names the offending element.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& what)
      : Error(location.empty() ? what : location + ": " + what), location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// An instance or parameter violates a semantic precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A pull-back received a target solution that the reduction's correctness
/// argument rules out.
class SoundnessViolation : public Error {
 public:
  using Error::Error;
};

/// An internal guarantee failed (e.g. a total search found nothing).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace tfnp
