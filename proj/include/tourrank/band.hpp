#pragma once

#include <vector>

#include "tourrank/ranking.hpp"
#include "tourrank/types.hpp"

namespace tourrank {

// Per-vertex allowed displacement from the seed ranking, indexed by vertex.
using RadiusMap = std::vector<int>;

// Forced/window decomposition of prefix sizes induced by a seed ranking and
// per-vertex radii. A set S is valid when it contains every v with
// seed(v) <= |S| - r(v) and no v with seed(v) > |S| + r(v); every valid set of
// size s is forced(s) plus a subset of window(s).
class Band {
public:
    Band(const Ranking& seed, const RadiusMap& radius);

    int n() const { return n_; }
    const Ranking& seed() const { return seed_; }
    int radius(Vertex v) const { return radius_[v]; }

    // max over s of |window(s)|; the DP state space is at most (n+1) * 2^psi.
    int psi() const { return psi_; }

    // Vertices with s - r(v) < seed(v) <= s + r(v), sorted by seed position.
    const std::vector<Vertex>& window(int s) const { return windows_[s]; }
    // Vertices whose membership becomes forced exactly at size s (seed(v) + r(v) == s).
    const std::vector<Vertex>& forced_entrants(int s) const { return entrants_[s]; }
    int forced_count(int s) const { return forced_count_[s]; }

    bool is_forced(int s, Vertex v) const { return seed_.position(v) + radius_[v] <= s; }
    bool is_excluded(int s, Vertex v) const { return seed_.position(v) - radius_[v] > s; }

    // Index of v in window(s), or -1.
    int window_index(int s, Vertex v) const;

private:
    int n_ = 0;
    Ranking seed_;
    RadiusMap radius_;
    int psi_ = 0;
    std::vector<std::vector<Vertex>> windows_;
    std::vector<std::vector<Vertex>> entrants_;
    std::vector<int> forced_count_;
};

}  // namespace tourrank
