#pragma once

#include <stdexcept>

namespace wron {

// Exact division left the ring (wrong sine power or a wrong Wronskian upstream).
struct NotDivisibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Brute-force Wronskian guard: more than 10 functions.
struct SizeExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chain function handed to a transform whose seed class it does not belong to.
struct WrongClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two forms that must differ by a constant do not.
struct NotProportionalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series truncation cannot reach the requested tolerance within the term cap.
struct TolUnreachableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad suite bounds, unknown suite name, malformed flag values.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unwritable or unreadable path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wron
