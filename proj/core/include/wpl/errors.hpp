#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wpl {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Weight list is invalid (empty after normalization rules would be fine,
/// but entries must be >= 1 and fit in a machine word).
class WeightError : public Error {
public:
  using Error::Error;
};

/// Interior-parameter list is invalid: wrong count, repeated values, or a
/// value colliding with one of the three normalized points.
class LambdaError : public Error {
public:
  using Error::Error;
};

/// A degree class or vector was used with data it does not belong to
/// (wrong arm count, exponent out of range, size mismatch).
class DataMismatchError : public Error {
public:
  using Error::Error;
};

/// Operation requires a minimum / maximum number of arms that the given
/// weight data does not satisfy.
class ArityError : public Error {
public:
  using Error::Error;
};

/// A supplied coordinate point does not satisfy the defining equations.
class RelationViolationError : public Error {
public:
  using Error::Error;
};

/// An iteration cap was reached before the computation could certify an
/// answer (caller may retry with a larger cap).
class CapExceededError : public Error {
public:
  using Error::Error;
};

/// Path enumeration exceeded the configured cap.
class PathCapError : public Error {
public:
  using Error::Error;
};

/// The arrow set contains a directed cycle of total twist zero, so path
/// enumeration per twist would not terminate.
class CycleDegreeError : public Error {
public:
  using Error::Error;
};

/// An internal consistency certificate failed (e.g. generation could not be
/// verified within the scanned window).
class CertificateError : public Error {
public:
  using Error::Error;
};

/// Problem size exceeds a documented safety bound for an exact algorithm.
class SizeError : public Error {
public:
  using Error::Error;
};

/// Syntax error while parsing text input; carries the byte offset of the
/// offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// A generator symbol referenced an arm index outside 1..n.
class DegreeIndexError : public Error {
public:
  DegreeIndexError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace wpl
