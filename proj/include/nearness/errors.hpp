#pragma once

#include <stdexcept>

namespace nearness {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: unknown ids, ragged matrices, bad documents.
struct InputError : Error {
    using Error::Error;
};

// A computation was refused because it would exceed a configured bound.
struct ResourceError : Error {
    using Error::Error;
};

// Input is well formed but lacks a structural prerequisite
// (no additive identity, missing inverse, ...).
struct StructuralError : Error {
    using Error::Error;
};

// An operation result escaped the upper approximation it must stay in.
struct ClosureError : StructuralError {
    using StructuralError::StructuralError;
};

// An operation was invoked before its prerequisite check passed.
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace nearness
