#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orientals {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input. `position` is a byte offset into the input
/// when known, otherwise `npos`.
class ParseError : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit ParseError(const std::string& what, std::size_t position = npos)
        : Error(position == npos ? what : what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Domain/codomain mismatch between morphisms or combinations.
class ArityError : public Error {
public:
    using Error::Error;
};

/// Face/degeneracy/operation index outside its admissible range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Operation applied in a dimension where it is undefined (e.g. boundary of a 0-chain).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Two cells or morphisms do not have matching boundaries.
class NotComposableError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A supplied structure violates its own invariants (e.g. a table that is not a chain map).
class InvalidInputError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A search or enumeration exceeded its configured bound.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Integer coefficient arithmetic left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Always indicates a bug in this library.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void ensure(bool condition, const char* what) {
    if (!condition) throw InternalError(what);
}

}  // namespace detail

}  // namespace orientals
