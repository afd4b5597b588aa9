#pragma once

#include <stdexcept>
#include <string>

namespace polylin {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed data or a violated operation precondition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The input is well-formed but has the wrong shape for the requested
/// operation (non-simple linearization, cyclic digraph, integral instance
/// handed to a certificate builder, ...).
class StructureError : public Error {
public:
    using Error::Error;
};

/// An enumeration or search budget would be exceeded.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

} // namespace polylin
