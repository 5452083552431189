#pragma once

#include <stdexcept>
#include <string>

namespace skein {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Inputs violate an admissibility precondition (bad color triple, omega not
// in the generic set, index out of range, ...).
struct inadmissible_error : error {
    explicit inadmissible_error(const std::string& what) : error(what) {}
};

// A value cannot be represented in the active exact ring (fractional
// exponent, conductor too small, symbolic weight square, ...).
struct nonrepresentable_error : error {
    explicit nonrepresentable_error(const std::string& what) : error(what) {}
};

// A linear problem that should determine a unique answer is degenerate.
struct degenerate_error : error {
    explicit degenerate_error(const std::string& what) : error(what) {}
};

// Mixing values from different scalar modes or contexts.
struct mode_error : error {
    explicit mode_error(const std::string& what) : error(what) {}
};

} // namespace skein
