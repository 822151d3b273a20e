#pragma once

#include <stdexcept>
#include <string>

namespace acute {

/// Malformed input document (syntax, unknown vertex, bad field type).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant of a triangulation failed (non-manifold edge, wrong
/// Euler characteristic, ...). The message names the offending simplex.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical procedure did not reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree did not. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace acute
