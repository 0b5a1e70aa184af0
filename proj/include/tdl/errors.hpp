// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace tdl {

// Base for every error thrown by the library. The CLI maps subclasses to exit
// codes, so new errors should derive from the closest existing category.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad indices, schema problems, unparsable text.
class InputError : public Error {
 public:
  using Error::Error;
};

class CycleError : public InputError {
 public:
  using InputError::InputError;
};

class NotLattice : public InputError {
 public:
  using InputError::InputError;
};

class NotDistributive : public InputError {
 public:
  using InputError::InputError;
};

class NoBounds : public InputError {
 public:
  using InputError::InputError;
};

// A requested enumeration would exceed the configured bound.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

// A structure failed a mathematical precondition of the operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A theorem-level assertion failed; always indicates a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tdl
