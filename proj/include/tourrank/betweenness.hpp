#pragma once

#include <cstdint>
#include <vector>

#include "tourrank/band.hpp"
#include "tourrank/ranking.hpp"
#include "tourrank/report.hpp"
#include "tourrank/types.hpp"

namespace tourrank {

// Fully dense betweenness constraint system: every unordered triple carries a
// designated vertex that should sit positionally between the other two.
class BetweennessInstance {
public:
    explicit BetweennessInstance(int n);

    int size() const { return n_; }
    std::uint64_t triple_count() const { return mid_.size(); }

    Vertex middle(Vertex a, Vertex b, Vertex c) const;
    void set_middle(Vertex a, Vertex b, Vertex c, Vertex m);

    bool operator==(const BetweennessInstance& other) const = default;

private:
    int n_ = 0;
    std::vector<std::uint8_t> mid_;  // per sorted triple: 0/1/2 = which member is designated

    std::size_t index(int i, int j, int k) const;  // requires i < j < k
};

// Number of triples whose designated vertex is not the positional median.
Cost bt_cost(const BetweennessInstance& b, const Ranking& r);

// Cost over all pairs of placed vertices with v at doubled position pos2.
// v's own entry in ord, if any, is ignored; pos2 must not collide with anyone else.
Cost bt_insertion_cost(const BetweennessInstance& b, const Ordering& ord, Vertex v, int pos2);

// Cost of the triples containing v under r itself (v at its own slot).
Cost bt_incident_cost(const BetweennessInstance& b, const Ranking& r, Vertex v);

struct Candidate {
    Ranking ranking;
    Cost cost = 0;
};

// Distinct local optima of single-vertex-move local search from `restarts`
// random starts, best-first, truncated to max_size. Deterministic per seed.
// Stands in for a constant-factor candidate provider; carries no distance
// guarantee, which is why the solver supports radius escalation.
struct CandidateSet {
    std::vector<Candidate> entries;
};

CandidateSet candidate_rankings(const BetweennessInstance& b, std::uint64_t seed,
                                int restarts = 20, int max_size = 8);

struct BtRadiusParams {
    Cost a1_num = 4, a1_den = 1;
    Cost a2_num = 4, a2_den = 1;

    BtRadiusParams doubled() const { return {a1_num * 2, a1_den, a2_num * 2, a2_den}; }
};

// r(v) = ceil(a1*sqrt(C(seed)/n) + a2*b(seed,v)/n), clamped to n, exact on the
// squared form.
RadiusMap bt_radii(const BetweennessInstance& b, const Ranking& seed,
                   const BtRadiusParams& params = {});

// Optimal banded ranking via the prefix-cost recurrence: appending v to prefix
// S' adds the cost of every triple {u, v, q} with u in S' and q outside,
// ordered u before v before q. The full-set value telescopes to bt_cost.
DpResult banded_dp_bt(const BetweennessInstance& b, const Ranking& seed, const RadiusMap& radius,
                      const DpLimits& limits = {});

struct BtSolveOptions {
    BtRadiusParams params;
    DpLimits limits;
    int restarts = 20;
    int max_candidates = 8;
    std::uint64_t seed = 1;
    // When set, re-solve with doubled radius constants until two consecutive
    // passes agree on the cost or some band spans every position (at which
    // point the DP is exhaustive and the result certified optimal).
    bool escalate = false;
    int max_doublings = 12;
};

// Best banded-DP result over all candidate seeds whose cost is within twice
// the best candidate's. Throws ResourceLimit when no candidate fits the
// configured band guards (or escalation runs out of doublings).
SolveReport solve_betweenness(const BetweennessInstance& b, const BtSolveOptions& options = {});

}  // namespace tourrank
