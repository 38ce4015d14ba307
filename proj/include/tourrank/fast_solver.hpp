#pragma once

#include <cstdint>
#include <utility>

#include "tourrank/band.hpp"
#include "tourrank/ranking.hpp"
#include "tourrank/report.hpp"
#include "tourrank/tournament.hpp"
#include "tourrank/types.hpp"

namespace tourrank {

// Vertices sorted by ascending weighted indegree, ties by vertex id. A
// 5-approximation for the backward-arc objective.
Ranking approx_ranking(const WeightedTournament& t);

// r(v) = ceil(4*sqrt(2*C(seed)/D) + 2*b(seed,v)/D), evaluated exactly on the
// squared form. Over-covering only widens the band, never loses the optimum.
RadiusMap fast_radii(const WeightedTournament& t, const Ranking& seed);

// Optimal ranking with |pi(v) - seed(v)| <= r(v) for all v, by dynamic
// programming over valid prefix sets keyed by (size, window bitmask).
// Throws ResourceLimit when psi exceeds limits.psi_cap or the memoized state
// count exceeds limits.max_states.
DpResult banded_dp(const WeightedTournament& t, const Ranking& seed, const RadiusMap& radius,
                   const DpLimits& limits = {});

// Same optimum cost with polynomial space: recursively enumerates valid
// half-size cut sets between fixed endpoints and solves the halves.
std::pair<Ranking, Cost> banded_divide_conquer(const WeightedTournament& t, const Ranking& seed,
                                               const RadiusMap& radius, const DpLimits& limits = {});

struct FastSolveOptions {
    DpLimits limits;
    bool divide_conquer = false;
    bool use_kernel = true;
};

// Full pipeline: approximate seed, kernelize with the seed cost as budget,
// banded DP on the kernel, lift the result back and add the recorded shift.
SolveReport solve_fast(const WeightedTournament& t, const FastSolveOptions& options = {});

}  // namespace tourrank
