#pragma once

#include <stdexcept>
#include <string>

namespace effa {

/// Base class of every exception raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unknown semiring name, bad option combination.
class ConfigError : public Error {
    using Error::Error;
};

/// Carrier, monad or semiring mismatch between composed values.
class InterfaceError : public Error {
    using Error::Error;
};

/// Foreign letters, out-of-range arguments.
class InputError : public Error {
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
    using Error::Error;
};

/// A size bound (function monoid, closure, product enumeration) was exceeded.
class ResourceError : public Error {
    using Error::Error;
};

/// Recognizer data is inconsistent (e.g. no preimage exists).
class IntegrityError : public Error {
    using Error::Error;
};

/// The requested operation is not available for this monad.
class CapabilityError : public Error {
    using Error::Error;
};

/// Game move whose preconditions fail.
class IllegalMove : public Error {
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace effa
