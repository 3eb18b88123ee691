#pragma once

#include <stdexcept>
#include <string>

namespace abckit {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidModulus : public Error {
 public:
  using Error::Error;
};

/// Root isolation could not certify disjoint enclosures at the allowed precision.
class RefinementFailed : public Error {
 public:
  using Error::Error;
};

/// The p-adic factorization could not certify a local factor.
class UnsupportedSplitting : public Error {
 public:
  using Error::Error;
};

class WildRamification : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// An interval comparison straddles its threshold at the maximum precision.
class UndecidableComparison : public Error {
 public:
  using Error::Error;
};

class DegenerateTransform : public Error {
 public:
  using Error::Error;
};

class DegreeCapExceeded : public Error {
 public:
  using Error::Error;
};

class VerificationFailed : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a point where the quantity is undefined (tripod point, pole).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace abckit
