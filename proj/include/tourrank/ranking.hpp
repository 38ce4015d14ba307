#pragma once

#include <limits>
#include <vector>

#include "tourrank/types.hpp"

namespace tourrank {

// Bijection between n vertices and positions 1..n.
class Ranking {
public:
    Ranking() = default;

    static Ranking identity(int n);
    // order[i] = vertex at position i+1. Throws if not a permutation of 0..n-1.
    static Ranking of_order(std::vector<Vertex> order);

    int size() const { return static_cast<int>(order_.size()); }
    int position(Vertex v) const { return pos_[v]; }  // 1-based
    Vertex at(int position) const { return order_[position - 1]; }
    const std::vector<Vertex>& order() const { return order_; }

    Ranking reversed() const;

    bool operator==(const Ranking& other) const { return order_ == other.order_; }
    bool operator!=(const Ranking& other) const { return !(*this == other); }

private:
    std::vector<Vertex> order_;
    std::vector<int> pos_;
};

// Number of vertex pairs the two rankings order differently.
// Throws std::invalid_argument if the rankings are over different vertex sets.
long long kendall_tau(const Ranking& a, const Ranking& b);

// Partial injection of vertices into half-integer positions. Positions are
// stored doubled so that both integer slots and g + 1/2 gaps stay exact.
class Ordering {
public:
    explicit Ordering(int n) : pos2_(n, kAbsent) {}

    static Ordering of_ranking(const Ranking& r);

    int universe() const { return static_cast<int>(pos2_.size()); }
    bool contains(Vertex v) const { return pos2_[v] != kAbsent; }
    int pos2(Vertex v) const { return pos2_[v]; }

    // Throws on a position collision with an already placed vertex.
    void place(Vertex v, int pos2);
    void erase(Vertex v) { pos2_[v] = kAbsent; }

    // Placed vertices in increasing position order.
    std::vector<Vertex> domain() const;

private:
    static constexpr int kAbsent = std::numeric_limits<int>::min();
    std::vector<int> pos2_;
};

}  // namespace tourrank
