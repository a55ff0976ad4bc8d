#pragma once

#include <stdexcept>
#include <string>

namespace linkdim {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: parse failures, unknown labels, violated
// call preconditions. The CLI maps this to exit code 2.
struct InputError : Error {
    using Error::Error;
};

// Input graph is not connected. A subtype of InputError because the analyses
// here require connectivity of the input.
struct DisconnectedError : InputError {
    using InputError::InputError;
};

// Input is well formed but the requested result does not exist: random graph
// generation exhausted its retry budget, coordinates are unrealizable or
// ambiguous, an upgrade was started from a non-resolving landmark set.
// The CLI maps this to exit code 3.
struct InfeasibleError : Error {
    using Error::Error;
};

// Request exceeds a configured size limit (exact search or the enumeration
// oracle). The remedy is a flag or a smaller instance, so the CLI maps this
// to exit code 1.
struct CapabilityError : Error {
    using Error::Error;
};

} // namespace linkdim
