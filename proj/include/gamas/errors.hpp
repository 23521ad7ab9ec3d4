#pragma once

#include <stdexcept>
#include <string>

namespace gamas {

/// Operand shapes or sizes disagree (different n, vector dimensions, ...).
class SizeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A request exceeds one of the configured desk-scale caps. Never truncated silently.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace gamas
