/* errors.hpp -- error taxonomy shared by library and CLI exit codes */
#pragma once

#include <stdexcept>
#include <string>

namespace gapshift {

// Malformed configuration or request shape (CLI exit 2).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

// A configured cap on states/words/nodes was hit (CLI exit 3).
struct ResourceCapError : std::runtime_error {
    explicit ResourceCapError(const std::string& m) : std::runtime_error(m) {}
};

// Domain-level failure: infeasible glue request, violated precondition (CLI exit 1).
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace gapshift
