#ifndef DFISHER_ERRORS_HPP
#define DFISHER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dfisher {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable name, used in CSV status columns.
  virtual const char* kind() const noexcept { return "Error"; }
};

/// A parameter lies outside the family's admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DomainError"; }
};

/// A lattice point outside the orthogonality support was requested.
class OutOfSupport : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "OutOfSupport"; }
};

/// Degree is negative or exceeds N-1 for the bounded families.
class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DegreeOutOfRange"; }
};

/// A vanishing denominator was met before a series or formula terminated.
class DenominatorPole : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DenominatorPole"; }
};

/// A series without a nonpositive-integer numerator parameter was passed
/// to the terminating evaluator.
class NotTerminating : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NotTerminating"; }
};

/// The truncation hard cap was hit before the tail bound fell below tolerance.
class TruncationCapExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "TruncationCapExceeded"; }
};

/// The quantity is irrational and cannot be produced by the exact backend.
class NotRepresentable : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NotRepresentable"; }
};

}  // namespace dfisher

#endif  // DFISHER_ERRORS_HPP
