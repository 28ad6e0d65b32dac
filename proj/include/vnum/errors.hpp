#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vnum {

/// Input text rejected by the ring or ideal grammar. `offset` is the byte
/// position of the first offending character in the input string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Mathematically invalid request: colon or saturation by the zero ideal,
/// zero/unit ideal where a proper one is required, bad window sizes, ...
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The prime handed in is not an associated prime of the ideal.
class NotAssociatedError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The prime is not associated at the sweep horizon, so no series exists.
class NotAsymptoticError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Brute-force witness search ran out of degrees. Signals a bound that is
/// too small, not a mathematical failure.
class OracleBoundError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Exponent or degree arithmetic would wrap a 64-bit unsigned integer.
class OverflowError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A configured work ceiling (component count) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands over different rings, or a malformed value construction.
class StructureError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A checked internal invariant failed; indicates a bug in this library.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace vnum
