#pragma once

#include <stdexcept>
#include <string>

namespace lambda_gs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generator index outside {1, ..., k+1}.
class InvalidGeneratorError : public Error {
 public:
  using Error::Error;
};

// parent() of the identity.
class NoParentError : public Error {
 public:
  using Error::Error;
};

// Requested tree depth exceeds the configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class EmptyInteriorError : public Error {
 public:
  using Error::Error;
};

// Theorem-level routines only cover k = 2, |A| = 1.
class UnsupportedRegimeError : public Error {
 public:
  using Error::Error;
};

// Two configurations differ at a vertex too close to the boundary of V_n.
class BoundaryDifferenceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace lambda_gs
