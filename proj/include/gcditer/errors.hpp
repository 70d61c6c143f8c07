#pragma once

#include <stdexcept>
#include <string>

namespace gcditer {

/// Bad inputs: violated operation preconditions. CLI exit code 2.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed text input, annotated with the offending position. CLI exit code 2.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument("at position " + std::to_string(position) + ": " + what),
          pos(position) {}
    std::size_t pos;
};

/// An internal exactness invariant failed (inexact level division, survey
/// reconstruction mismatch). Falsifies the implementation, never the
/// mathematics. CLI exit code 3.
class StructuralFailure : public std::logic_error {
public:
    StructuralFailure(const std::string& what, long k_offending)
        : std::logic_error(what + " (k = " + std::to_string(k_offending) + ")"),
          k(k_offending) {}
    long k;
};

/// A proved statement failed on computed data. CLI exit code 3.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gcditer
