#pragma once

#include <stdexcept>
#include <string>

namespace freelift {

// Error taxonomy mirrored by the CLI exit codes: parse (2), validation (3),
// capacity (4), invariant failure (5).

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent inputs: dimension mismatches, duplicate points,
// broken preconditions, mode violations.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured size cap was exceeded (group order, point count, enumerations).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// A postcondition the mathematics guarantees failed to hold at the declared
// arithmetic mode. Indicates a defect, never bad user input.
struct InvariantFailure : std::runtime_error {
    explicit InvariantFailure(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace freelift
