#pragma once

#include <stdexcept>
#include <string>

namespace multisieve {

/// Raised when an exactness guarantee fails: a sum that must be divisible
/// by k!, q or n is not, an oracle returns a negative count, or two
/// evaluation paths that must agree do not. Signals corrupted input or a
/// bug, never a recoverable condition.
class integrity_error : public std::runtime_error {
public:
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed or out-of-contract input (bad JSON, violated
/// preconditions, size ceilings exceeded).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace multisieve
