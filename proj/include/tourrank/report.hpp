#pragma once

#include <cstdint>

#include "tourrank/ranking.hpp"
#include "tourrank/types.hpp"

namespace tourrank {

struct SolveReport {
    Ranking ranking;
    Cost cost = 0;       // exact optimum, numerator over denom
    Cost denom = 1;
    Cost kernel_shift = 0;
    int psi = 0;
    std::uint64_t dp_states = 0;
    std::int64_t micros = 0;
    // True when the result carries an unconditional optimality argument. Always
    // true for the arc-weight solver; the betweenness solver sets it only when
    // a full-width band (or a zero-cost ranking) was reached.
    bool certified = true;

    // Observability for scaling checks.
    Cost seed_cost = 0;  // cost of the seed ranking on the instance the DP ran on
    int kernel_n = 0;
};

struct DpLimits {
    int psi_cap = 40;
    std::uint64_t max_states = 30'000'000;
};

struct DpResult {
    Ranking ranking;
    Cost cost = 0;
    std::uint64_t states = 0;
};

}  // namespace tourrank
