#pragma once

#include <stdexcept>

namespace wavecoh {

// Malformed configuration or parameters. CLI exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unusable input data (missing files, gaps, bad values). CLI exit code 2.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation produced unusable numbers. CLI exit code 3.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wavecoh
