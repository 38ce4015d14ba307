#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tourrank/betweenness.hpp"
#include "tourrank/tournament.hpp"
#include "tourrank/types.hpp"

namespace tourrank {

// Deterministic generator RNG. Draws go through explicit modulo reduction so
// identical seeds produce byte-identical instances on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 eng_;
};

// Transitive instance: w(v_i, v_j) = 1 for i < j, denominator 1.
WeightedTournament make_chain(int n);

// Directed 3-cycle a -> b -> c -> a on three vertices, denominator 1.
WeightedTournament make_three_cycle();

// Chain plus k distinct uniformly random pair flips.
WeightedTournament gen_fast_flips(int n, int k, std::uint64_t seed);

// Designated middles induced by the identity chain: the median of each triple.
BetweennessInstance chain_betweenness(int n);

// Chain-induced middles with k distinct random triples redesignated to a
// uniformly chosen non-median member.
BetweennessInstance gen_bt_flips(int n, int k, std::uint64_t seed);

}  // namespace tourrank
