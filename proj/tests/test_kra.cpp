#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "tourrank/kra.hpp"
#include "tourrank/oracle.hpp"

using namespace tourrank;
using testsupport::random_profile;
using testsupport::random_ranking;

namespace {

VoteProfile p1() {
    return {{"a", "b", "c"},
            {Ranking::of_order({0, 1, 2}), Ranking::of_order({0, 1, 2}),
             Ranking::of_order({1, 0, 2})}};
}

// Enumerates every ranking and minimizes the distance sum directly, without
// touching the pairwise reduction.
std::pair<Cost, Ranking> brute_force_aggregate(const VoteProfile& profile) {
    const int n = profile.candidate_count();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Cost best = -1;
    Ranking best_ranking = Ranking::identity(n);
    do {
        Ranking r = Ranking::of_order(perm);
        Cost total = 0;
        for (const Ranking& vote : profile.votes) total += kendall_tau(r, vote);
        if (best < 0 || total < best) {
            best = total;
            best_ranking = r;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, best_ranking};
}

}  // namespace

TEST_CASE("pairwise reduction counts votes per direction") {
    WeightedTournament t = reduce_to_fast(p1());
    CHECK(t.denom() == 3);
    CHECK(t.weight(0, 1) == 2);
    CHECK(t.weight(1, 0) == 1);
    CHECK(t.weight(0, 2) == 3);
    CHECK(t.weight(1, 2) == 3);
    CHECK(t.validate().empty());

    VoteProfile single{{"a", "b", "c"}, {Ranking::of_order({0, 1, 2})}};
    CHECK(reduce_to_fast(single) == make_chain(3));

    VoteProfile opposite{{"a", "b"},
                         {Ranking::of_order({0, 1}), Ranking::of_order({1, 0})}};
    WeightedTournament t2 = reduce_to_fast(opposite);
    CHECK(t2.denom() == 2);
    CHECK(t2.weight(0, 1) == 1);
    CHECK(t2.weight(1, 0) == 1);
}

TEST_CASE("distance sums on hand profiles") {
    CHECK(total_kendall_tau(p1(), Ranking::of_order({0, 1, 2})) == 1);

    VoteProfile single{{"a", "b", "c"}, {Ranking::of_order({0, 1, 2})}};
    CHECK(total_kendall_tau(single, Ranking::of_order({0, 1, 2})) == 0);

    VoteProfile opposite{{"a", "b"},
                         {Ranking::of_order({0, 1}), Ranking::of_order({1, 0})}};
    CHECK(total_kendall_tau(opposite, Ranking::of_order({0, 1})) == 1);
    CHECK(total_kendall_tau(opposite, Ranking::of_order({1, 0})) == 1);
}

TEST_CASE("reduction cost identity") {
    Rng rng(51);
    for (int iter = 0; iter < 200; ++iter) {
        const int candidates = 2 + static_cast<int>(rng.below(6));
        const int votes = 1 + static_cast<int>(rng.below(9));
        VoteProfile profile = random_profile(rng, candidates, votes);
        WeightedTournament t = reduce_to_fast(profile);
        Ranking r = random_ranking(rng, candidates);
        CHECK(ranking_cost(t, r) == total_kendall_tau(profile, r));
    }
}

TEST_CASE("aggregate on hand profiles") {
    SolveReport report = aggregate(p1());
    CHECK(report.ranking == Ranking::of_order({0, 1, 2}));
    CHECK(report.cost == 1);
    CHECK(report.denom == 3);

    VoteProfile unanimous{{"x", "y", "z", "w"}, {}};
    Ranking vote = Ranking::of_order({2, 0, 3, 1});
    for (int i = 0; i < 5; ++i) unanimous.votes.push_back(vote);
    SolveReport u = aggregate(unanimous);
    CHECK(u.cost == 0);
    CHECK(u.ranking == vote);

    VoteProfile rotations{{"a", "b", "c", "d"},
                          {Ranking::of_order({0, 1, 2, 3}), Ranking::of_order({1, 2, 3, 0}),
                           Ranking::of_order({2, 3, 0, 1}), Ranking::of_order({3, 0, 1, 2})}};
    SolveReport r = aggregate(rotations);
    CHECK(r.cost == brute_force_aggregate(rotations).first);
    CHECK(total_kendall_tau(rotations, r.ranking) == r.cost);
}

TEST_CASE("aggregate matches the direct enumeration") {
    Rng rng(52);
    for (int iter = 0; iter < 60; ++iter) {
        const int candidates = 2 + static_cast<int>(rng.below(5));
        const int votes = 1 + static_cast<int>(rng.below(9));
        VoteProfile profile = random_profile(rng, candidates, votes);
        SolveReport report = aggregate(profile);
        CHECK(report.cost == brute_force_aggregate(profile).first);
        CHECK(total_kendall_tau(profile, report.ranking) == report.cost);
    }
}

TEST_CASE("relabeling candidates relabels the result") {
    Rng rng(53);
    for (int iter = 0; iter < 40; ++iter) {
        const int candidates = 2 + static_cast<int>(rng.below(4));
        const int votes = 1 + static_cast<int>(rng.below(7));
        VoteProfile profile = random_profile(rng, candidates, votes);
        Ranking relabel = random_ranking(rng, candidates);  // old id -> new id via position-1

        VoteProfile renamed;
        renamed.candidates.resize(candidates);
        for (Vertex v = 0; v < candidates; ++v) {
            renamed.candidates[relabel.position(v) - 1] = profile.candidates[v];
        }
        for (const Ranking& vote : profile.votes) {
            std::vector<Vertex> order;
            for (Vertex v : vote.order()) order.push_back(relabel.position(v) - 1);
            renamed.votes.push_back(Ranking::of_order(std::move(order)));
        }

        SolveReport a = aggregate(profile);
        SolveReport b = aggregate(renamed);
        CHECK(a.cost == b.cost);

        // with a unique optimum the output must be the relabeled ranking
        int optima = 0;
        std::vector<Vertex> perm(candidates);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (total_kendall_tau(profile, Ranking::of_order(perm)) == a.cost) ++optima;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (optima == 1) {
            std::vector<Vertex> mapped;
            for (Vertex v : a.ranking.order()) mapped.push_back(relabel.position(v) - 1);
            CHECK(b.ranking == Ranking::of_order(std::move(mapped)));
        }
    }
}

TEST_CASE("profiles with malformed votes are rejected") {
    VoteProfile missing{{"a", "b", "c"}, {Ranking::of_order({0, 1})}};
    CHECK_THROWS_AS(reduce_to_fast(missing), std::invalid_argument);
    VoteProfile empty{{"a", "b"}, {}};
    CHECK_THROWS_AS(reduce_to_fast(empty), std::invalid_argument);
}
