#pragma once

#include <stdexcept>
#include <string>

namespace polyalg {

// Base of every error the library raises on purpose. The CLI maps each
// subclass to its own exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polyomino text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (non-simple, non-thin,
// disconnected input, invalid collapse step, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The Hilbert function prefix is too short to recover h(t), or the requested
// depth is below what a comparison needs.
class InsufficientDepthError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A configured resource guard (variables, degree, pairs, rank) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree by theorem disagreed. Either the implementation
// is wrong or the theorem is; never conflated with bad input.
class FalsificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyalg
