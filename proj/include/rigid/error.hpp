#pragma once

#include <stdexcept>
#include <string>

namespace rigid {

/// Base class for every error raised by the library.
class RigidityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad indices, mismatched sizes, unknown
/// member kinds, non-finite numbers.
class InputError : public RigidityError {
 public:
  using RigidityError::RigidityError;
};

/// Input is well formed but violates an operation's precondition
/// (too few shared vertices, degenerate affine span, ...).
class PreconditionError : public RigidityError {
 public:
  using RigidityError::RigidityError;
};

/// The request is outside the regime an operation is defined for.
class UnsupportedError : public RigidityError {
 public:
  using RigidityError::RigidityError;
};

/// A stress matrix kernel is too small to build a configuration from.
class DegenerateKernelError : public RigidityError {
 public:
  using RigidityError::RigidityError;
};

}  // namespace rigid
