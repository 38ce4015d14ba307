#pragma once

// Shared instance generators for the test suites. Everything here is driven by
// an explicit Rng so every test run is reproducible.

#include <string>
#include <vector>

#include "tourrank/betweenness.hpp"
#include "tourrank/gen.hpp"
#include "tourrank/kra.hpp"
#include "tourrank/ranking.hpp"
#include "tourrank/tournament.hpp"

namespace tourrank::testsupport {

inline WeightedTournament random_tournament(Rng& rng, int n, Cost denom) {
    WeightedTournament t(n, denom);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            t.set_pair(u, v, static_cast<Cost>(rng.below(denom + 1)));
        }
    }
    return t;
}

inline BetweennessInstance random_betweenness(Rng& rng, int n) {
    BetweennessInstance b(n);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            for (Vertex k = j + 1; k < n; ++k) {
                Vertex pick[3] = {i, j, k};
                b.set_middle(i, j, k, pick[rng.below(3)]);
            }
        }
    }
    return b;
}

inline Ranking random_ranking(Rng& rng, int n) {
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    return Ranking::of_order(std::move(order));
}

inline VoteProfile random_profile(Rng& rng, int candidates, int votes) {
    VoteProfile profile;
    for (int i = 0; i < candidates; ++i) profile.candidates.push_back("c" + std::to_string(i));
    for (int i = 0; i < votes; ++i) profile.votes.push_back(random_ranking(rng, candidates));
    return profile;
}

// The designated middle of triple {0,1,2} moved to vertex 0, on the 4-vertex
// chain instance.
inline BetweennessInstance b1_instance() {
    BetweennessInstance b = chain_betweenness(4);
    b.set_middle(0, 1, 2, 0);
    return b;
}

}  // namespace tourrank::testsupport
