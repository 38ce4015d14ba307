#include "tourrank/band.hpp"

#include <algorithm>
#include <stdexcept>

namespace tourrank {

Band::Band(const Ranking& seed, const RadiusMap& radius)
    : n_(seed.size()), seed_(seed), radius_(radius) {
    if (static_cast<int>(radius.size()) != n_) {
        throw std::invalid_argument("Band: radius map size mismatch");
    }
    windows_.resize(n_ + 1);
    entrants_.resize(n_ + 1);
    forced_count_.assign(n_ + 1, 0);

    // v sits in window(s) for s in [seed(v) - r(v), seed(v) + r(v) - 1] and is
    // forced from s = seed(v) + r(v) on.
    for (Vertex v = 0; v < n_; ++v) {
        if (radius_[v] < 0) throw std::invalid_argument("Band: negative radius");
        const int p = seed_.position(v);
        const int lo = std::max(0, p - radius_[v]);
        const int hi = std::min(n_, p + radius_[v] - 1);
        for (int s = lo; s <= hi; ++s) windows_[s].push_back(v);
        const int enter = p + radius_[v];
        if (enter <= n_) entrants_[enter].push_back(v);
    }
    for (int s = 0; s <= n_; ++s) {
        auto& w = windows_[s];
        std::sort(w.begin(), w.end(),
                  [&](Vertex a, Vertex b) { return seed_.position(a) < seed_.position(b); });
        psi_ = std::max(psi_, static_cast<int>(w.size()));
        if (s > 0) {
            forced_count_[s] = forced_count_[s - 1] + static_cast<int>(entrants_[s].size());
        }
    }
}

int Band::window_index(int s, Vertex v) const {
    const auto& w = windows_[s];
    const int p = seed_.position(v);
    auto it = std::lower_bound(w.begin(), w.end(), p, [&](Vertex a, int pos) {
        return seed_.position(a) < pos;
    });
    if (it != w.end() && *it == v) return static_cast<int>(it - w.begin());
    return -1;
}

}  // namespace tourrank
