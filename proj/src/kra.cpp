#include "tourrank/kra.hpp"

#include <stdexcept>

namespace tourrank {

namespace {

void check_profile(const VoteProfile& profile) {
    if (profile.votes.empty()) throw std::invalid_argument("profile needs at least one vote");
    for (const Ranking& vote : profile.votes) {
        if (vote.size() != profile.candidate_count()) {
            throw std::invalid_argument("vote does not cover the candidate set");
        }
    }
}

}  // namespace

WeightedTournament reduce_to_fast(const VoteProfile& profile) {
    check_profile(profile);
    const int n = profile.candidate_count();
    WeightedTournament t(n, profile.vote_count());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            Cost before = 0;
            for (const Ranking& vote : profile.votes) {
                if (vote.position(u) < vote.position(v)) ++before;
            }
            t.set_pair(u, v, before);
        }
    }
    return t;
}

Cost total_kendall_tau(const VoteProfile& profile, const Ranking& r) {
    check_profile(profile);
    if (r.size() != profile.candidate_count()) {
        throw std::invalid_argument("ranking does not cover the candidate set");
    }
    Cost total = 0;
    for (const Ranking& vote : profile.votes) total += kendall_tau(r, vote);
    return total;
}

SolveReport aggregate(const VoteProfile& profile, const FastSolveOptions& options) {
    return solve_fast(reduce_to_fast(profile), options);
}

}  // namespace tourrank
