#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sclkit {

// Base of every error thrown by the library. The CLI maps each subclass to
// a distinct exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// The chain has nonzero image in the abelianization.
class NotBoundaryError : public Error {
public:
    using Error::Error;
};

// Iteration caps, letter caps, search budgets and time budgets.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// A computed result failed an exact cross-check (duality, Bavard bound,
// certificate soundness, stabilization monotonicity).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class RankMismatch : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace sclkit
