#pragma once

#include <stdexcept>
#include <string>

namespace cwlin {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (polynomials, ring headers, graph files).
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// A precondition on the mathematical input is violated (not a basis,
// size guard exceeded, non-chordal graph where chordality is required, ...).
struct input_error : error {
    explicit input_error(const std::string& msg) : error(msg) {}
};

// A configurable resource cap (pair reductions, wall clock, lattice size)
// was exceeded.  Always a distinct failure, never a wrong answer.
struct resource_limit_error : error {
    explicit resource_limit_error(const std::string& msg) : error(msg) {}
};

// Internal consistency violation (exact division failed, homology checksum
// mismatch).  Indicates a bug, not bad input.
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace cwlin
