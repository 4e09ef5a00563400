#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

// Raised when an exhaustive search is asked to run beyond its supported
// problem size (the CLI maps this to its own exit code).
struct ScaleError : std::runtime_error {
    explicit ScaleError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when parameters fall outside the regime a routine is defined for
// (e.g. a closed form that needs n1 > n2).
struct OutOfScopeError : std::runtime_error {
    explicit OutOfScopeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lrc
