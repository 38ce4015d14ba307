#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tourrank {

// Dense vertex index, 0..n-1. External names (e.g. candidate strings) live in
// a side table next to the instance that owns them.
using Vertex = std::int32_t;

// Exact cost numerator over an instance-wide denominator. All comparisons are
// integer comparisons; there is no floating-point cost anywhere.
using Cost = std::int64_t;

// Insertion slot between ranking positions g and g+1, i.e. real position g + 1/2.
struct GapPosition {
    int g = 0;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// A solve ran into its band-width or state-count guard. The instance's optimum
// is too large for the configured memory budget.
struct ResourceLimit : std::runtime_error {
    int psi;
    ResourceLimit(int psi_, const std::string& msg) : std::runtime_error(msg), psi(psi_) {}
};

}  // namespace tourrank
