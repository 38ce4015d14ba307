#include "tourrank/fast_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "banded_dp.hpp"
#include "tourrank/kernel.hpp"

namespace tourrank {

Ranking approx_ranking(const WeightedTournament& t) {
    const int n = t.size();
    std::vector<Cost> indeg(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u = 0; u < n; ++u) {
            if (u != v) indeg[v] += t.weight(u, v);
        }
    }
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return indeg[a] != indeg[b] ? indeg[a] < indeg[b] : a < b;
    });
    return Ranking::of_order(std::move(order));
}

namespace {

// Smallest integer r with r >= 4*sqrt(2*c/denom) + 2*b/denom, i.e. with
// r*denom - 2b >= 0 and (r*denom - 2b)^2 >= 32*c*denom.
int exact_fast_radius(Cost c, Cost b, Cost denom) {
    auto holds = [&](long long r) {
        __int128 lhs = static_cast<__int128>(r) * denom - 2 * static_cast<__int128>(b);
        if (lhs < 0) return false;
        return lhs * lhs >= static_cast<__int128>(32) * c * denom;
    };
    long double est = 4.0L * std::sqrt(2.0L * c / static_cast<long double>(denom)) +
                      2.0L * b / static_cast<long double>(denom);
    long long r = std::max(0ll, static_cast<long long>(est) - 2);
    while (!holds(r)) ++r;
    while (r > 0 && holds(r - 1)) --r;
    return static_cast<int>(r);
}

struct FastCoster {
    const WeightedTournament& t;
    const Band& band;
    std::vector<Cost> forced_sum;  // v -> total weight from v back to forced(s-1)
    const std::vector<Vertex>* wprev = nullptr;

    FastCoster(const WeightedTournament& t_, const Band& band_)
        : t(t_), band(band_), forced_sum(t_.size(), 0) {}

    void begin_layer(int s) {
        for (Vertex u : band.forced_entrants(s - 1)) {
            for (Vertex v = 0; v < t.size(); ++v) {
                if (v != u) forced_sum[v] += t.weight(v, u);
            }
        }
        wprev = &band.window(s - 1);
    }

    Cost transition(std::uint64_t pm, std::uint64_t, Vertex v, int) const {
        Cost c = forced_sum[v];
        for (std::uint64_t bits = pm; bits != 0; bits &= bits - 1) {
            Vertex u = (*wprev)[std::countr_zero(bits)];
            if (u != v) c += t.weight(v, u);
        }
        return c;
    }

    Cost direct_cost(const std::vector<char>& in_prefix, Vertex v) const {
        Cost c = 0;
        for (Vertex u = 0; u < t.size(); ++u) {
            if (u != v && in_prefix[u]) c += t.weight(v, u);
        }
        return c;
    }
};

}  // namespace

RadiusMap fast_radii(const WeightedTournament& t, const Ranking& seed) {
    if (seed.size() != t.size()) throw std::invalid_argument("fast_radii: seed size mismatch");
    const Cost c = ranking_cost(t, seed);
    RadiusMap radius(t.size(), 0);
    for (Vertex v = 0; v < t.size(); ++v) {
        radius[v] = exact_fast_radius(c, incident_cost(t, seed, v), t.denom());
    }
    return radius;
}

DpResult banded_dp(const WeightedTournament& t, const Ranking& seed, const RadiusMap& radius,
                   const DpLimits& limits) {
    Band band(seed, radius);
    FastCoster coster(t, band);
    return detail::banded_dp_engine(band, limits, coster);
}

namespace {

struct DcSolver {
    const WeightedTournament& t;
    const Band& band;

    // Best ordering of b_set \ a_set placed directly after a_set, where every
    // intermediate prefix must stay valid. Cost covers pairs inside the segment
    // plus arcs from segment vertices back into a_set.
    std::optional<std::pair<Cost, std::vector<Vertex>>> solve(const std::vector<char>& a_set,
                                                              int a_size,
                                                              const std::vector<char>& b_set,
                                                              int b_size) const {
        const int m = b_size - a_size;
        if (m == 0) return std::make_pair(Cost{0}, std::vector<Vertex>{});
        if (m == 1) {
            Vertex v = -1;
            Cost c = 0;
            for (Vertex u = 0; u < band.n(); ++u) {
                if (b_set[u] && !a_set[u]) v = u;
            }
            for (Vertex u = 0; u < band.n(); ++u) {
                if (a_set[u]) c += t.weight(v, u);
            }
            return std::make_pair(c, std::vector<Vertex>{v});
        }

        const int mid = a_size + (m + 1) / 2;
        // Candidate cut sets: forced(mid) plus a window subset, sandwiched
        // between the endpoints.
        std::vector<Vertex> mandatory;
        std::vector<Vertex> optional_pool;
        std::vector<char> cut(band.n(), 0);
        int cut_base = 0;
        for (Vertex v = 0; v < band.n(); ++v) {
            if (band.is_forced(mid, v)) {
                if (!b_set[v]) return std::nullopt;
                cut[v] = 1;
                ++cut_base;
            }
        }
        for (Vertex v : band.window(mid)) {
            if (a_set[v] && !cut[v]) {
                mandatory.push_back(v);
            } else if (b_set[v] && !a_set[v] && !cut[v]) {
                optional_pool.push_back(v);
            }
        }
        for (Vertex v = 0; v < band.n(); ++v) {
            if (a_set[v] && !cut[v] && band.window_index(mid, v) < 0) return std::nullopt;
        }
        for (Vertex v : mandatory) {
            cut[v] = 1;
            ++cut_base;
        }
        const int need = mid - cut_base;
        if (need < 0 || need > static_cast<int>(optional_pool.size())) return std::nullopt;

        std::optional<std::pair<Cost, std::vector<Vertex>>> best;
        std::vector<Vertex> picked;
        auto recurse = [&](auto&& self, std::size_t from, int left) -> void {
            if (left == 0) {
                auto lo = solve(a_set, a_size, cut, mid);
                if (!lo) return;
                auto hi = solve(cut, mid, b_set, b_size);
                if (!hi) return;
                Cost total = lo->first + hi->first;
                if (!best || total < best->first) {
                    auto order = lo->second;
                    order.insert(order.end(), hi->second.begin(), hi->second.end());
                    best = std::make_pair(total, std::move(order));
                }
                return;
            }
            if (optional_pool.size() - from < static_cast<std::size_t>(left)) return;
            for (std::size_t i = from; i < optional_pool.size(); ++i) {
                cut[optional_pool[i]] = 1;
                self(self, i + 1, left - 1);
                cut[optional_pool[i]] = 0;
            }
        };
        recurse(recurse, 0, need);
        return best;
    }
};

}  // namespace

std::pair<Ranking, Cost> banded_divide_conquer(const WeightedTournament& t, const Ranking& seed,
                                               const RadiusMap& radius, const DpLimits& limits) {
    Band band(seed, radius);
    if (band.psi() > limits.psi_cap || band.psi() > 63) {
        throw ResourceLimit(band.psi(), "band too wide: psi=" + std::to_string(band.psi()) +
                                            " exceeds cap " + std::to_string(limits.psi_cap));
    }
    const int n = t.size();
    std::vector<char> empty(n, 0), full(n, 1);
    DcSolver solver{t, band};
    auto best = solver.solve(empty, 0, full, n);
    if (!best) throw std::logic_error("banded_divide_conquer: no valid ranking");
    return {Ranking::of_order(std::move(best->second)), best->first};
}

SolveReport solve_fast(const WeightedTournament& t, const FastSolveOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const int n = t.size();

    Ranking full_seed = approx_ranking(t);
    Cost budget = ranking_cost(t, full_seed);

    KernelResult kr = [&] {
        if (options.use_kernel) return kernelize(t, budget);
        KernelResult identity{t, 0, {}, {}, n};
        identity.vertex_map.resize(n);
        std::iota(identity.vertex_map.begin(), identity.vertex_map.end(), 0);
        return identity;
    }();

    Ranking seed = approx_ranking(kr.kernel);
    RadiusMap radius = fast_radii(kr.kernel, seed);
    Band band(seed, radius);

    SolveReport report;
    report.denom = t.denom();
    report.kernel_shift = kr.shift;
    report.kernel_n = kr.kernel.size();
    report.seed_cost = ranking_cost(kr.kernel, seed);
    report.psi = band.psi();

    DpResult dp;
    if (options.divide_conquer) {
        auto [ranking, cost] = banded_divide_conquer(kr.kernel, seed, radius, options.limits);
        dp = {std::move(ranking), cost, 0};
    } else {
        dp = banded_dp(kr.kernel, seed, radius, options.limits);
    }
    report.dp_states = dp.states;

    report.ranking = kr.lift(dp.ranking);
    report.cost = dp.cost + kr.shift;
    if (ranking_cost(t, report.ranking) != report.cost) {
        throw std::logic_error("solve_fast: lifted ranking does not match kernel cost bookkeeping");
    }

    report.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return report;
}

}  // namespace tourrank
