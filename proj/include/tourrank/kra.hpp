#pragma once

#include <string>
#include <vector>

#include "tourrank/fast_solver.hpp"
#include "tourrank/ranking.hpp"
#include "tourrank/report.hpp"
#include "tourrank/tournament.hpp"

namespace tourrank {

// A non-empty list of total orders over a common candidate set. Candidate i's
// external name is candidates[i].
struct VoteProfile {
    std::vector<std::string> candidates;
    std::vector<Ranking> votes;

    int candidate_count() const { return static_cast<int>(candidates.size()); }
    int vote_count() const { return static_cast<int>(votes.size()); }
};

// Pairwise-majority tournament: denominator = number of votes, w(u,v) = number
// of votes ranking u before v.
WeightedTournament reduce_to_fast(const VoteProfile& profile);

// Sum of Kendall-tau distances from r to every vote; the average distance is
// this value over vote_count(). Equals ranking_cost(reduce_to_fast(p), r).
Cost total_kendall_tau(const VoteProfile& profile, const Ranking& r);

// Ranking minimizing the average Kendall-tau distance to the votes, solved
// exactly through the pairwise reduction. Report denom is the vote count.
SolveReport aggregate(const VoteProfile& profile, const FastSolveOptions& options = {});

}  // namespace tourrank
