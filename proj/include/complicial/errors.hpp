#pragma once

#include <stdexcept>
#include <string>

namespace complicial {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (bad dimension, bad index).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A chain or table refers to something that is not registered.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// x #_n y requested with d_n^+ x != d_n^- y.
class CompositionError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Element-count budget exceeded during a search or closure.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class HornError : public Error {
 public:
  using Error::Error;
};

class UnsupportedHornError : public Error {
 public:
  using Error::Error;
};

// A stratified set failed to provide a required unique thin filler.
class ComplicialStructureError : public Error {
 public:
  using Error::Error;
};

// The requested element would live above the truncation dimension.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace complicial
