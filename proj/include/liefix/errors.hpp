#pragma once

#include <stdexcept>
#include <string>

namespace liefix {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A Cartan type, group spec or selector that does not describe a valid group.
class InvalidGroup : public Error {
public:
  using Error::Error;
};

/// A group spec string that cannot be parsed (unknown family, bad rank, bad syntax).
class ParseError : public InvalidGroup {
public:
  using InvalidGroup::InvalidGroup;
};

/// A center selector that is not valid for its Cartan type.
class InvalidSelector : public InvalidGroup {
public:
  using InvalidGroup::InvalidGroup;
};

/// An input outside an operation's precondition (wrong dimension, not a root, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// An orbit or enumeration grew past its configured cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A structural invariant failed (e.g. retraction found two candidates).
/// Signals a bug rather than bad input.
class ConstructionError : public Error {
public:
  using Error::Error;
};

}  // namespace liefix
