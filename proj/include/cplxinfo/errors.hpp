#pragma once

#include <stdexcept>
#include <string>

namespace cplxinfo {

// Bad distribution parameters, malformed specs, unusable samples.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Adaptive integration exhausted its subdivision or evaluation budget.
class QuadratureError : public std::runtime_error {
public:
    explicit QuadratureError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cplxinfo
