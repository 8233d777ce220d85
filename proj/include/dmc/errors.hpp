#pragma once

#include <stdexcept>
#include <string>

namespace dmc {

// Bad caller input: unknown vertex ids, malformed structures, violated
// preconditions. CLI maps this to exit code 3.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A desk-scale guard refused the computation. CLI maps this to exit code 2.
// Guards are overridable via the *_limit knobs on the individual calls.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dmc
