#pragma once

#include <stdexcept>
#include <string>

namespace krasner {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed tables, bad arities, unknown elements, failed constructions.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (e.g. Q meets S, Q = A).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace krasner
