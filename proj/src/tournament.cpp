#include "tourrank/tournament.hpp"

#include <stdexcept>

namespace tourrank {

WeightedTournament::WeightedTournament(int n, Cost denom)
    : n_(n), denom_(denom), w_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0 || denom < 1) {
        throw std::invalid_argument("WeightedTournament: need n >= 0 and denom >= 1");
    }
}

void WeightedTournament::set_pair(Vertex u, Vertex v, Cost num) {
    if (u == v || num < 0 || num > denom_) {
        throw std::invalid_argument("WeightedTournament::set_pair: bad pair or numerator");
    }
    w_[static_cast<std::size_t>(u) * n_ + v] = num;
    w_[static_cast<std::size_t>(v) * n_ + u] = denom_ - num;
}

void WeightedTournament::set_directed(Vertex u, Vertex v, Cost num) {
    w_[static_cast<std::size_t>(u) * n_ + v] = num;
}

std::vector<std::pair<Vertex, Vertex>> WeightedTournament::validate() const {
    std::vector<std::pair<Vertex, Vertex>> violations;
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            if (weight(u, v) + weight(v, u) != denom_ || weight(u, v) < 0 || weight(v, u) < 0) {
                violations.emplace_back(u, v);
            }
        }
    }
    return violations;
}

Cost ranking_cost(const WeightedTournament& t, const Ranking& r) {
    const int n = t.size();
    Cost total = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            total += t.weight(r.at(j), r.at(i));  // arc from the later vertex back to the earlier
        }
    }
    return total;
}

Cost insertion_cost(const WeightedTournament& t, const Ranking& r, Vertex v, GapPosition p) {
    const int n = r.size();
    Cost total = 0;
    for (Vertex u = 0; u < n; ++u) {
        if (u == v) continue;
        total += r.position(u) <= p.g ? t.weight(v, u) : t.weight(u, v);
    }
    return total;
}

Cost incident_cost(const WeightedTournament& t, const Ranking& r, Vertex v) {
    return insertion_cost(t, r, v, GapPosition{r.position(v)});
}

}  // namespace tourrank
