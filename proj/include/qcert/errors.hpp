#pragma once

#include <stdexcept>
#include <string>

namespace qcert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A divisor does not divide exactly. Wherever a quotient is asserted to be
/// polynomial this signals a broken identity.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NonMonicModulus : public Error {
 public:
  using Error::Error;
};

class NotOddPrime : public Error {
 public:
  using Error::Error;
};

class PNotDividingN : public Error {
 public:
  using Error::Error;
};

/// A surviving term carries an exponent that is not an integer.
class NonIntegralExponent : public Error {
 public:
  using Error::Error;
};

/// A certificate denominator factor is the zero polynomial.
class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace qcert
