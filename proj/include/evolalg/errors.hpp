#pragma once

#include <stdexcept>
#include <string>

namespace evolalg {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed text in a file or token stream.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A contract on values or shapes was violated (NotSquare, LoopEdge, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The operation requires a regular evolution algebra.
class NotRegularError : public Error {
public:
    using Error::Error;
};

/// The algebra is not monomially equivalent to any graph image.
class NotInImageError : public Error {
public:
    using Error::Error;
};

/// A closure or search exceeded its configured cap.
class CapError : public Error {
public:
    using Error::Error;
};

/// Group realization did not pass verification.
class RealizationError : public Error {
public:
    using Error::Error;
};

} // namespace evolalg
