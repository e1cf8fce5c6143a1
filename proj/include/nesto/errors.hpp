#pragma once

#include <stdexcept>
#include <string>

namespace nesto {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can map families of failures onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (bad subset, invalid move, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class GroundSetTooLarge : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class MalformedPolynomial : public Error {
 public:
  using Error::Error;
};

/// An h-polynomial that is not palindromic, or a gamma expansion that leaves
/// a remainder. Never expected for a valid nestohedron.
class SymmetryViolation : public Error {
 public:
  using Error::Error;
};

class NotFlag : public Error {
 public:
  using Error::Error;
};

/// A state that contradicts a theorem the algorithm relies on.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace nesto
