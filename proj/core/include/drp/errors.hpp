#pragma once

#include <stdexcept>
#include <string>

namespace drp {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Grid or matrix extents outside the supported range.
class SizingError : public Error {
public:
  using Error::Error;
};

// Shapes of otherwise valid objects do not agree.
class DimensionError : public Error {
public:
  using Error::Error;
};

// A precondition on user-supplied values is violated.
class ValidationError : public Error {
public:
  using Error::Error;
};

// A name (scheme, format, key) is not one of the accepted identifiers.
class UnknownNameError : public Error {
public:
  using Error::Error;
};

// Malformed configuration text.
class ParseError : public Error {
public:
  using Error::Error;
};

// Time stepping requested for a scheme that cannot be solved explicitly.
class NotExplicitError : public Error {
public:
  using Error::Error;
};

// A linear solve hit a (numerically) singular matrix.
class SingularMatrixError : public Error {
public:
  using Error::Error;
};

// A retained diagonal block is singular; the division step is undefined.
class RankError : public Error {
public:
  using Error::Error;
};

// Constraint has no solution (all multipliers vanish, right side does not).
class InfeasibleError : public Error {
public:
  using Error::Error;
};

// Non-finite value where a finite one is required.
class NonFiniteError : public Error {
public:
  using Error::Error;
};

// Solution magnitude crossed the overflow guard; `step` is the first level at
// which it happened.
class InstabilityError : public Error {
public:
  InstabilityError(const std::string& what, int step) : Error(what), step_(step) {}
  int step() const { return step_; }

private:
  int step_;
};

} // namespace drp
