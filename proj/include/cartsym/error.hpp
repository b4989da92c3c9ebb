#pragma once

#include <stdexcept>
#include <string>

namespace cartsym {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (cycle notation, group or character descriptors, files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Arguments outside an operation's domain (bad degree, residue out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagree, or a
/// mathematical invariant that must hold does not. Always an implementation
/// or input-data bug; callers should abort.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// A bounded search ran out of budget before reaching a verdict.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace cartsym
