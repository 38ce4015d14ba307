#include "tourrank/gen.hpp"

#include <array>
#include <set>
#include <stdexcept>

namespace tourrank {

WeightedTournament make_chain(int n) {
    WeightedTournament t(n, 1);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) t.set_pair(i, j, 1);
    }
    return t;
}

WeightedTournament make_three_cycle() {
    WeightedTournament t(3, 1);
    t.set_pair(0, 1, 1);
    t.set_pair(1, 2, 1);
    t.set_pair(2, 0, 1);
    return t;
}

namespace {

std::pair<Vertex, Vertex> decode_pair(int n, std::uint64_t idx) {
    for (Vertex i = 0; i < n; ++i) {
        const std::uint64_t row = static_cast<std::uint64_t>(n - 1 - i);
        if (idx < row) return {i, static_cast<Vertex>(i + 1 + idx)};
        idx -= row;
    }
    throw std::logic_error("decode_pair: index out of range");
}

std::array<Vertex, 3> decode_triple(int n, std::uint64_t idx) {
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const std::uint64_t row = static_cast<std::uint64_t>(n - 1 - j);
            if (idx < row) return {i, j, static_cast<Vertex>(j + 1 + idx)};
            idx -= row;
        }
    }
    throw std::logic_error("decode_triple: index out of range");
}

std::set<std::uint64_t> distinct_draws(Rng& rng, std::uint64_t pool, int count) {
    std::set<std::uint64_t> picked;
    while (static_cast<int>(picked.size()) < count) picked.insert(rng.below(pool));
    return picked;
}

}  // namespace

WeightedTournament gen_fast_flips(int n, int k, std::uint64_t seed) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (n < 1 || k < 0 || static_cast<std::uint64_t>(k) > pairs) {
        throw std::invalid_argument("gen_fast_flips: need n >= 1 and 0 <= k <= n(n-1)/2");
    }
    WeightedTournament t = make_chain(n);
    Rng rng(seed);
    for (std::uint64_t idx : distinct_draws(rng, pairs, k)) {
        auto [i, j] = decode_pair(n, idx);
        t.set_pair(i, j, 0);  // reverse the chain arc
    }
    return t;
}

BetweennessInstance chain_betweenness(int n) { return BetweennessInstance(n); }

BetweennessInstance gen_bt_flips(int n, int k, std::uint64_t seed) {
    const std::uint64_t triples =
        n < 3 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) * (n - 2) / 6;
    if (n < 1 || k < 0 || static_cast<std::uint64_t>(k) > triples) {
        throw std::invalid_argument("gen_bt_flips: need n >= 1 and 0 <= k <= n(n-1)(n-2)/6");
    }
    BetweennessInstance b = chain_betweenness(n);
    Rng rng(seed);
    for (std::uint64_t idx : distinct_draws(rng, triples, k)) {
        auto [i, j, l] = decode_triple(n, idx);
        b.set_middle(i, j, l, rng.below(2) == 0 ? i : l);  // redesignate off the median
    }
    return b;
}

}  // namespace tourrank
