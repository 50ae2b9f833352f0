#pragma once

#include <stdexcept>
#include <string>

namespace vctk {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a documented invariant (parity, self-pairing, span, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-range input (names, tokens, JSON documents).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An exact computation has no integral answer (singular, non-unimodular, ...).
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace vctk
