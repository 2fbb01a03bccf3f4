#pragma once

#include <stdexcept>
#include <string>

namespace dickson {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public Error {
 public:
  ModulusMismatch() : Error("operands belong to different rings") {}
};

/// Raised when a base layer fails its structural self-checks; means the
/// primitive quadratic it was built from is not primitive.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class SingularSeed : public Error {
 public:
  using Error::Error;
};

class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

class NonResidue : public Error {
 public:
  using Error::Error;
};

class VerificationFailed : public Error {
 public:
  using Error::Error;
};

class IncompleteFactorization : public Error {
 public:
  using Error::Error;
};

class NonCoprimeCofactor : public Error {
 public:
  using Error::Error;
};

class UnsupportedExponent : public Error {
 public:
  using Error::Error;
};

class EmptyCode : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace dickson
