#pragma once

#include <stdexcept>
#include <string>

namespace kst {

// Raised for malformed user input: documents that do not parse, multimaps
// that violate the model invariants, out-of-range grades, unknown names,
// or exceeded enumeration guards. Maps to exit/status code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal invariant is violated (a bug, not a user error).
// Maps to exit/status code 2.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

namespace detail {
inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}
} // namespace detail

} // namespace kst
