#ifndef GRAPES_ERRORS_HPP
#define GRAPES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grapes {

// Malformed files, unknown labels, violated operation preconditions.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A desk-scale guardrail was exceeded (brute-force cutoffs).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant; always a bug, never bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace grapes

#endif
