#pragma once

#include <stdexcept>
#include <string>

namespace extenso {

struct CycleError : std::runtime_error {
    explicit CycleError(const std::string& what) : std::runtime_error(what) {}
};

struct IndexError : std::runtime_error {
    explicit IndexError(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateError : std::runtime_error {
    explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace extenso
