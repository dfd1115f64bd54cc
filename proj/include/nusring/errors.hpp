#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nusring {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An element was used with a ring that did not produce it, or its index is out of range.
class ForeignElementError : public Error {
public:
    using Error::Error;
};

/// A construction (or full axiom check) would exceed the configured size budget.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

/// Construction inputs failed validation (bad endomorphism, non-ideal, non-idempotent corner, ...).
class InvalidConstructionError : public Error {
public:
    using Error::Error;
};

/// A structured element encoding does not describe an element of the ring.
class EncodingError : public Error {
public:
    using Error::Error;
};

/// Raised when an internal consistency assertion about the mathematics fails.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace nusring
