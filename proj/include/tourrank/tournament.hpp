#pragma once

#include <utility>
#include <vector>

#include "tourrank/ranking.hpp"
#include "tourrank/types.hpp"

namespace tourrank {

// Complete directed pair-weight structure with exact fixed-denominator
// weights: for every ordered pair (u,v), u != v, an integer numerator in
// [0, D] with w(u,v) + w(v,u) = D. Immutable once filled in.
class WeightedTournament {
public:
    WeightedTournament(int n, Cost denom);

    int size() const { return n_; }
    Cost denom() const { return denom_; }
    Cost weight(Vertex u, Vertex v) const { return w_[static_cast<std::size_t>(u) * n_ + v]; }

    // Sets w(u,v) = num and w(v,u) = denom - num.
    void set_pair(Vertex u, Vertex v, Cost num);
    // Sets a single direction without touching the complement. Only useful for
    // building deliberately inconsistent instances in validation tests.
    void set_directed(Vertex u, Vertex v, Cost num);

    // Pairs violating w(u,v) + w(v,u) = D; empty means the instance is well formed.
    std::vector<std::pair<Vertex, Vertex>> validate() const;

    bool operator==(const WeightedTournament& other) const = default;

private:
    int n_ = 0;
    Cost denom_ = 1;
    std::vector<Cost> w_;
};

// Total weight of backward arcs under the ranking (numerator over denom()).
Cost ranking_cost(const WeightedTournament& t, const Ranking& r);

// Weight of the arcs incident to v when v sits at gap p, everything else as in r.
Cost insertion_cost(const WeightedTournament& t, const Ranking& r, Vertex v, GapPosition p);

// insertion_cost at the slot just right of v's own position; equals the
// backward-arc weight incident to v in r.
Cost incident_cost(const WeightedTournament& t, const Ranking& r, Vertex v);

}  // namespace tourrank
