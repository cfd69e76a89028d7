#pragma once

#include <stdexcept>
#include <string>

namespace sehasel {

/// Bad parameters, malformed configs, out-of-range arguments. CLI exit code 1.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Solver or integrator failure at runtime. CLI exit code 2.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sehasel
