#include "tourrank/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tourrank {

Ranking Ranking::identity(int n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    return of_order(std::move(order));
}

Ranking Ranking::of_order(std::vector<Vertex> order) {
    const int n = static_cast<int>(order.size());
    std::vector<int> pos(n, 0);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        if (v < 0 || v >= n || pos[v] != 0) {
            throw std::invalid_argument("order is not a permutation of 0..n-1");
        }
        pos[v] = i + 1;
    }
    Ranking r;
    r.order_ = std::move(order);
    r.pos_ = std::move(pos);
    return r;
}

Ranking Ranking::reversed() const {
    std::vector<Vertex> order(order_.rbegin(), order_.rend());
    return of_order(std::move(order));
}

long long kendall_tau(const Ranking& a, const Ranking& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("kendall_tau: rankings over different vertex sets");
    }
    const int n = a.size();
    long long disagreements = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            bool in_a = a.position(u) < a.position(v);
            bool in_b = b.position(u) < b.position(v);
            if (in_a != in_b) ++disagreements;
        }
    }
    return disagreements;
}

Ordering Ordering::of_ranking(const Ranking& r) {
    Ordering ord(r.size());
    for (Vertex v = 0; v < r.size(); ++v) {
        ord.pos2_[v] = 2 * r.position(v);
    }
    return ord;
}

void Ordering::place(Vertex v, int pos2) {
    for (int u = 0; u < universe(); ++u) {
        if (u != v && pos2_[u] == pos2) {
            throw std::invalid_argument("Ordering::place: position collision");
        }
    }
    pos2_[v] = pos2;
}

std::vector<Vertex> Ordering::domain() const {
    std::vector<Vertex> placed;
    for (Vertex v = 0; v < universe(); ++v) {
        if (contains(v)) placed.push_back(v);
    }
    std::sort(placed.begin(), placed.end(),
              [&](Vertex a, Vertex b) { return pos2_[a] < pos2_[b]; });
    return placed;
}

}  // namespace tourrank
