#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infometer {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A partition scale outside 1..N.
class InvalidScale : public Error {
public:
    InvalidScale(std::size_t scale, std::size_t length);
    std::size_t scale() const noexcept { return scale_; }
    std::size_t length() const noexcept { return length_; }

private:
    std::size_t scale_;
    std::size_t length_;
};

/// Bad argument or inconsistent configuration (policy, declared alphabet, generator spec).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed UTF-8 input.
class DecodeError : public Error {
public:
    DecodeError(std::size_t offset, const std::string& what);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Raised when a computed result breaks a mathematical invariant. Indicates a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

} // namespace infometer
