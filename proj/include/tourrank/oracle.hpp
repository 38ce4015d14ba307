#pragma once

#include <utility>

#include "tourrank/betweenness.hpp"
#include "tourrank/ranking.hpp"
#include "tourrank/tournament.hpp"
#include "tourrank/types.hpp"

namespace tourrank::oracle {

// Independent brute-force solvers used as ground truth in tests. They share
// nothing with the solver pipeline beyond the core cost functions.

// Exhaustive minimum over all n! rankings, n <= 10. Ties resolve to the
// lexicographically smallest order.
std::pair<Cost, Ranking> brute_force_fast(const WeightedTournament& t);

// Subset dynamic program over all 2^n prefixes, n <= 24.
std::pair<Cost, Ranking> subset_dp_fast(const WeightedTournament& t);

// Exhaustive minimum over all n! rankings, n <= 8.
std::pair<Cost, Ranking> brute_force_bt(const BetweennessInstance& b);

}  // namespace tourrank::oracle
