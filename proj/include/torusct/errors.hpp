#pragma once

#include <stdexcept>
#include <string>

namespace torusct {

// Error taxonomy mirrors the CLI exit-code contract:
//   SchemaError -> 2, CoveringError -> 3, WeightError -> 4, NumericError -> 5.
// Plain std::invalid_argument is reserved for caller misuse (bad dimensions,
// out-of-range parameters).

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

struct CoveringError : std::runtime_error {
    explicit CoveringError(const std::string& what) : std::runtime_error(what) {}
};

struct WeightError : std::runtime_error {
    explicit WeightError(const std::string& what) : std::runtime_error(what) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace torusct
