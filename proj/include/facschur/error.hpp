#pragma once

#include <stdexcept>
#include <string>

namespace facschur {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero polynomial") {}
};

// Raised by exact division when a remainder survives. Inside the identity
// routes this means an alternating-sum identity was violated.
class NotDivisible : public Error {
public:
  using Error::Error;
};

class CyclicBinding : public Error {
public:
  using Error::Error;
};

class DuplicateVariable : public Error {
public:
  using Error::Error;
};

class NonSquare : public Error {
public:
  using Error::Error;
};

// A parameter-sequence access resolved to an index outside the declared
// window of an Explicit or Symbolic sequence.
class WindowExceeded : public Error {
public:
  explicit WindowExceeded(long index)
      : Error("parameter sequence window exceeded at index " + std::to_string(index)),
        index_(index) {}

  long index() const noexcept { return index_; }

private:
  long index_;
};

class NotInHook : public Error {
public:
  using Error::Error;
};

class PreconditionViolated : public Error {
public:
  using Error::Error;
};

class NotSupersymmetric : public Error {
public:
  using Error::Error;
};

class SequenceNotMultiplicityFree : public Error {
public:
  using Error::Error;
};

class DegreeBoundExceeded : public Error {
public:
  using Error::Error;
};

// Two routes that must agree produced different polynomials.
class InternalMismatch : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace facschur
