#pragma once

#include <stdexcept>
#include <string>

namespace hyperricci {

// Bad user-supplied data or parameters. The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Solver breakdown: non-convergence, disconnected supports, NaN/inf weights.
// The CLI maps this to exit code 3.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperricci
