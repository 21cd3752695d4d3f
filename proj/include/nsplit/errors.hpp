#pragma once

#include <stdexcept>

namespace nsplit {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unparseable or invalid input: bad documents, instance invariant
/// violations, malformed cuts or splittings, bad parameters.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A structural precondition does not hold (e.g. a graph that must be
/// connected and semi-Eulerian is not).
class DomainViolation : public Error {
 public:
  using Error::Error;
};

/// The instance exceeds a configured size limit of an exact algorithm.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// A step that is guaranteed to succeed by construction failed; indicates a
/// bug or a violated promise, never bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace nsplit
