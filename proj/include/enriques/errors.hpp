#pragma once
#include <stdexcept>

namespace enriques {

// Malformed or out-of-contract input (CLI exit code 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented operation precondition was violated (CLI exit code 3).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace enriques
