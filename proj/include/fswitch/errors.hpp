#pragma once

#include <stdexcept>
#include <string>

namespace fswitch {

// Error classes that the CLI maps onto distinct exit codes
// (config 2, io 3, data 4, fit 5). Pure-math domain violations
// use std::domain_error / std::invalid_argument directly.

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested evaluation outside an interpolated curve's load domain.
struct ExtrapolationError : DataError {
    using DataError::DataError;
};

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fswitch
