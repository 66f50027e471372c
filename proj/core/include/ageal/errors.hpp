#pragma once

#include <stdexcept>
#include <string>

namespace ageal {

// Malformed or out-of-contract input: bad JSON, unknown builtin name,
// signature mismatch, capacity violation in a composition vector, ...
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded (structure too large for an
// exhaustive routine, closure cap, window that refuses to stabilize).
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed.  These guard facts the code relies on
// (pairwise monomorphicity being transitive, Burnside agreeing with direct
// orbit counts).  Seeing one means a bug, not bad input.
struct internal_inconsistency : std::logic_error {
    explicit internal_inconsistency(const std::string& what) : std::logic_error(what) {}
};

}
