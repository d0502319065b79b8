#pragma once

#include <stdexcept>
#include <string>

namespace stylediff {

// Error taxonomy maps onto CLI exit codes: config 2, io 3, numeric 4.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dimension disagreements between operands.
struct ShapeError : NumericError {
    explicit ShapeError(const std::string& msg) : NumericError(msg) {}
};

// Vector arithmetic that collapses below representable direction.
struct DegenerateError : NumericError {
    explicit DegenerateError(const std::string& msg) : NumericError(msg) {}
};

}  // namespace stylediff
