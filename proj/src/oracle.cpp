#include "tourrank/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tourrank::oracle {

std::pair<Cost, Ranking> brute_force_fast(const WeightedTournament& t) {
    const int n = t.size();
    if (n > 10) throw std::invalid_argument("brute_force_fast: n > 10");
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Cost best = std::numeric_limits<Cost>::max();
    std::vector<Vertex> best_perm = perm;
    do {
        Cost c = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) c += t.weight(perm[j], perm[i]);
        }
        if (c < best) {
            best = c;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, Ranking::of_order(std::move(best_perm))};
}

std::pair<Cost, Ranking> subset_dp_fast(const WeightedTournament& t) {
    const int n = t.size();
    if (n > 24) throw std::invalid_argument("subset_dp_fast: n > 24");
    if (n == 0) return {0, Ranking::identity(0)};

    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<Cost> dp(full + 1, std::numeric_limits<Cost>::max());
    std::vector<std::int8_t> last(full + 1, -1);
    dp[0] = 0;
    for (std::size_t mask = 1; mask <= full; ++mask) {
        for (std::size_t vb = mask; vb != 0; vb &= vb - 1) {
            const int v = std::countr_zero(vb);
            const std::size_t rest = mask & ~(std::size_t{1} << v);
            Cost c = dp[rest];
            for (std::size_t ub = rest; ub != 0; ub &= ub - 1) {
                c += t.weight(v, std::countr_zero(ub));
            }
            if (c < dp[mask]) {
                dp[mask] = c;
                last[mask] = static_cast<std::int8_t>(v);
            }
        }
    }

    std::vector<Vertex> order(n);
    std::size_t mask = full;
    for (int pos = n; pos >= 1; --pos) {
        const int v = last[mask];
        order[pos - 1] = v;
        mask &= ~(std::size_t{1} << v);
    }
    return {dp[full], Ranking::of_order(std::move(order))};
}

std::pair<Cost, Ranking> brute_force_bt(const BetweennessInstance& b) {
    const int n = b.size();
    if (n > 8) throw std::invalid_argument("brute_force_bt: n > 8");
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Cost best = std::numeric_limits<Cost>::max();
    std::vector<Vertex> best_perm = perm;
    do {
        Ranking r = Ranking::of_order(perm);
        Cost c = bt_cost(b, r);
        if (c < best) {
            best = c;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, Ranking::of_order(std::move(best_perm))};
}

}  // namespace tourrank::oracle
