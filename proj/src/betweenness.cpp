#include "tourrank/betweenness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "banded_dp.hpp"
#include "tourrank/gen.hpp"

namespace tourrank {

namespace {

std::size_t triples_of(int n) {
    if (n < 3) return 0;
    return static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
}

}  // namespace

// Every triple starts out designating its id-median, i.e. the constraint
// system induced by the identity chain.
BetweennessInstance::BetweennessInstance(int n) : n_(n), mid_(triples_of(n), 1) {
    if (n < 0) throw std::invalid_argument("BetweennessInstance: negative size");
}

std::size_t BetweennessInstance::index(int i, int j, int k) const {
    return static_cast<std::size_t>(k) * (k - 1) * (k - 2) / 6 +
           static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i);
}

Vertex BetweennessInstance::middle(Vertex a, Vertex b, Vertex c) const {
    int i = a, j = b, k = c;
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    const Vertex sorted[3] = {static_cast<Vertex>(i), static_cast<Vertex>(j),
                              static_cast<Vertex>(k)};
    return sorted[mid_[index(i, j, k)]];
}

void BetweennessInstance::set_middle(Vertex a, Vertex b, Vertex c, Vertex m) {
    int i = a, j = b, k = c;
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    if (i < 0 || k >= n_ || i == j || j == k) {
        throw std::invalid_argument("set_middle: bad triple");
    }
    std::uint8_t code = m == i ? 0 : m == j ? 1 : m == k ? 2 : 3;
    if (code == 3) throw std::invalid_argument("set_middle: middle not in triple");
    mid_[index(i, j, k)] = code;
}

Cost bt_cost(const BetweennessInstance& b, const Ranking& r) {
    const int n = b.size();
    Cost violations = 0;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            for (Vertex k = j + 1; k < n; ++k) {
                const int pi = r.position(i), pj = r.position(j), pk = r.position(k);
                Vertex positional = j;
                if ((pi < pj) == (pj < pk)) {
                    positional = j;
                } else if ((pj < pi) == (pi < pk)) {
                    positional = i;
                } else {
                    positional = k;
                }
                if (positional != b.middle(i, j, k)) ++violations;
            }
        }
    }
    return violations;
}

namespace {

// Positional middle of three distinct doubled positions.
Vertex positional_middle(Vertex a, int pa, Vertex b, int pb, Vertex c, int pc) {
    if ((pa < pb) == (pb < pc)) return b;
    if ((pb < pa) == (pa < pc)) return a;
    return c;
}

}  // namespace

Cost bt_insertion_cost(const BetweennessInstance& b, const Ordering& ord, Vertex v, int pos2) {
    std::vector<Vertex> placed;
    for (Vertex u = 0; u < ord.universe(); ++u) {
        if (u == v || !ord.contains(u)) continue;
        if (ord.pos2(u) == pos2) {
            throw std::invalid_argument("bt_insertion_cost: position collision");
        }
        placed.push_back(u);
    }
    Cost total = 0;
    for (std::size_t x = 0; x < placed.size(); ++x) {
        for (std::size_t y = x + 1; y < placed.size(); ++y) {
            Vertex u = placed[x], w = placed[y];
            Vertex mid = positional_middle(u, ord.pos2(u), w, ord.pos2(w), v, pos2);
            if (mid != b.middle(u, w, v)) ++total;
        }
    }
    return total;
}

Cost bt_incident_cost(const BetweennessInstance& b, const Ranking& r, Vertex v) {
    const int n = r.size();
    const int pv = 2 * r.position(v) + 1;
    Cost total = 0;
    for (Vertex u = 0; u < n; ++u) {
        if (u == v) continue;
        for (Vertex w = u + 1; w < n; ++w) {
            if (w == v) continue;
            Vertex mid = positional_middle(u, 2 * r.position(u), w, 2 * r.position(w), v, pv);
            if (mid != b.middle(u, w, v)) ++total;
        }
    }
    return total;
}

namespace {

// Cost of the triples containing v with v moved to the gap after position g.
Cost move_cost(const BetweennessInstance& b, const Ranking& r, Vertex v, int g) {
    const int n = r.size();
    const int pv = 2 * g + 1;
    Cost total = 0;
    for (Vertex u = 0; u < n; ++u) {
        if (u == v) continue;
        for (Vertex w = u + 1; w < n; ++w) {
            if (w == v) continue;
            Vertex mid = positional_middle(u, 2 * r.position(u), w, 2 * r.position(w), v, pv);
            if (mid != b.middle(u, w, v)) ++total;
        }
    }
    return total;
}

Ranking moved(const Ranking& r, Vertex v, int g) {
    std::vector<Vertex> order = r.order();
    const int from = r.position(v) - 1;
    order.erase(order.begin() + from);
    const int to = g > from ? g - 1 : g;
    order.insert(order.begin() + to, v);
    return Ranking::of_order(std::move(order));
}

}  // namespace

CandidateSet candidate_rankings(const BetweennessInstance& b, std::uint64_t seed, int restarts,
                                int max_size) {
    if (restarts < 1 || max_size < 1) {
        throw std::invalid_argument("candidate_rankings: need restarts >= 1 and max_size >= 1");
    }
    const int n = b.size();
    Rng rng(seed);
    std::vector<Candidate> found;
    for (int rep = 0; rep < restarts; ++rep) {
        std::vector<Vertex> start(n);
        std::iota(start.begin(), start.end(), 0);
        rng.shuffle(start);
        Ranking cur = Ranking::of_order(std::move(start));

        for (bool improved = true; improved;) {
            improved = false;
            for (Vertex v = 0; v < n; ++v) {
                const Cost own = bt_incident_cost(b, cur, v);
                Cost best = own;
                int best_gap = -1;
                for (int g = 0; g <= n; ++g) {
                    if (g == cur.position(v) || g == cur.position(v) - 1) continue;
                    const Cost c = move_cost(b, cur, v, g);
                    if (c < best) {
                        best = c;
                        best_gap = g;
                    }
                }
                if (best_gap >= 0) {
                    cur = moved(cur, v, best_gap);
                    improved = true;
                }
            }
        }

        bool duplicate = false;
        for (const Candidate& c : found) duplicate = duplicate || c.ranking == cur;
        if (!duplicate) found.push_back({cur, bt_cost(b, cur)});
    }
    std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b2) {
        return a.cost != b2.cost ? a.cost < b2.cost : a.ranking.order() < b2.ranking.order();
    });
    if (static_cast<int>(found.size()) > max_size) found.resize(max_size);
    return {std::move(found)};
}

namespace {

// Smallest integer r with r >= (p1/q1)*sqrt(c/n) + (p2/q2)*b/n, via
// q1*(r*n*q2 - p2*b) >= 0 and squared >= q2^2 * p1^2 * c * n.
int exact_bt_radius(Cost c, Cost b, int n, const BtRadiusParams& p) {
    auto holds = [&](long long r) {
        __int128 lhs = static_cast<__int128>(p.a1_den) *
                       (static_cast<__int128>(r) * n * p.a2_den - static_cast<__int128>(p.a2_num) * b);
        if (lhs < 0) return false;
        __int128 rhs = static_cast<__int128>(p.a2_den) * p.a2_den * p.a1_num * p.a1_num;
        return lhs * lhs >= rhs * c * n;
    };
    long double est = static_cast<long double>(p.a1_num) / p.a1_den *
                          std::sqrt(static_cast<long double>(c) / n) +
                      static_cast<long double>(p.a2_num) / p.a2_den * b / n;
    long long r = std::max(0ll, static_cast<long long>(est) - 2);
    while (r < n && !holds(r)) ++r;
    while (r > 0 && holds(r - 1)) --r;
    return static_cast<int>(std::min<long long>(r, n));
}

struct BtCoster {
    const BetweennessInstance& b;
    const Band& band;
    const int n;

    std::vector<Vertex> forced_prev;  // forced(s-1), grown incrementally
    std::vector<Vertex> outside;      // vertices excluded at the current size
    std::vector<int> slot_of;         // vertex -> candidate slot this layer, or -1
    std::vector<Vertex> cand;
    int stride_prev = 0, stride_cur = 0;
    std::vector<Cost> a_forced_out;             // per slot
    std::vector<Cost> sum_e;                    // per slot
    std::vector<Cost> b_prev_out;               // slot * stride_prev
    std::vector<Cost> e_forced_cur;             // slot * stride_cur
    std::vector<std::uint64_t> pair_masks;      // slot * stride_prev, bits over window(s)
    const std::vector<Vertex>* wprev = nullptr;
    const std::vector<Vertex>* wcur = nullptr;

    BtCoster(const BetweennessInstance& b_, const Band& band_)
        : b(b_), band(band_), n(b_.size()), slot_of(b_.size(), -1) {}

    bool violates(Vertex u, Vertex v, Vertex q) const {
        if (u == v || v == q || u == q) return false;
        return b.middle(u, v, q) != v;
    }

    void begin_layer(int s) {
        for (Vertex u : band.forced_entrants(s - 1)) forced_prev.push_back(u);
        wprev = &band.window(s - 1);
        wcur = &band.window(s);
        outside.clear();
        for (Vertex v = 0; v < n; ++v) {
            if (band.is_excluded(s, v)) outside.push_back(v);
        }
        for (Vertex v : cand) slot_of[v] = -1;
        cand = band.forced_entrants(s);
        cand.insert(cand.end(), wcur->begin(), wcur->end());
        for (std::size_t i = 0; i < cand.size(); ++i) slot_of[cand[i]] = static_cast<int>(i);

        stride_prev = static_cast<int>(wprev->size());
        stride_cur = static_cast<int>(wcur->size());
        a_forced_out.assign(cand.size(), 0);
        sum_e.assign(cand.size(), 0);
        b_prev_out.assign(cand.size() * stride_prev, 0);
        e_forced_cur.assign(cand.size() * stride_cur, 0);
        pair_masks.assign(cand.size() * stride_prev, 0);

        for (std::size_t ci = 0; ci < cand.size(); ++ci) {
            const Vertex v = cand[ci];
            Cost acc = 0;
            for (Vertex u : forced_prev) {
                for (Vertex q : outside) acc += violates(u, v, q);
            }
            a_forced_out[ci] = acc;
            for (int j = 0; j < stride_prev; ++j) {
                const Vertex u = (*wprev)[j];
                Cost row = 0;
                for (Vertex q : outside) row += violates(u, v, q);
                b_prev_out[ci * stride_prev + j] = row;
                std::uint64_t mask = 0;
                for (int tq = 0; tq < stride_cur; ++tq) {
                    if (violates(u, v, (*wcur)[tq])) mask |= 1ull << tq;
                }
                pair_masks[ci * stride_prev + j] = mask;
            }
            Cost se = 0;
            for (int tq = 0; tq < stride_cur; ++tq) {
                const Vertex q = (*wcur)[tq];
                Cost col = 0;
                if (q != v) {
                    for (Vertex u : forced_prev) col += violates(u, v, q);
                }
                e_forced_cur[ci * stride_cur + tq] = col;
                se += col;
            }
            sum_e[ci] = se;
        }
    }

    // Appending v to S' = forced(s-1) + prev_mask adds, for every u already
    // placed and every q still outside S, the cost of the triple ordered
    // u before v before q.
    Cost transition(std::uint64_t pm, std::uint64_t cm, Vertex v, int) const {
        const int ci = slot_of[v];
        Cost total = a_forced_out[ci];
        const Cost* brow = &b_prev_out[static_cast<std::size_t>(ci) * stride_prev];
        const std::uint64_t* grow = &pair_masks[static_cast<std::size_t>(ci) * stride_prev];
        const std::uint64_t out_mask =
            (stride_cur == 0 ? 0 : (~0ull >> (64 - stride_cur))) & ~cm;
        for (std::uint64_t bits = pm; bits != 0; bits &= bits - 1) {
            const int j = std::countr_zero(bits);
            total += brow[j];
            total += std::popcount(grow[j] & out_mask);
        }
        Cost esum = sum_e[ci];
        const Cost* erow = &e_forced_cur[static_cast<std::size_t>(ci) * stride_cur];
        for (std::uint64_t bits = cm; bits != 0; bits &= bits - 1) {
            esum -= erow[std::countr_zero(bits)];
        }
        return total + esum;
    }

    Cost direct_cost(const std::vector<char>& in_prefix, Vertex v) const {
        Cost total = 0;
        for (Vertex u = 0; u < n; ++u) {
            if (u == v || !in_prefix[u]) continue;
            for (Vertex q = 0; q < n; ++q) {
                if (!in_prefix[q]) total += violates(u, v, q);
            }
        }
        return total;
    }
};

}  // namespace

RadiusMap bt_radii(const BetweennessInstance& b, const Ranking& seed,
                   const BtRadiusParams& params) {
    if (seed.size() != b.size()) throw std::invalid_argument("bt_radii: seed size mismatch");
    if (params.a1_num <= 0 || params.a1_den <= 0 || params.a2_num <= 0 || params.a2_den <= 0) {
        throw std::invalid_argument("bt_radii: radius constants must be positive");
    }
    const int n = b.size();
    RadiusMap radius(n, 0);
    if (n == 0) return radius;
    const Cost c = bt_cost(b, seed);
    for (Vertex v = 0; v < n; ++v) {
        radius[v] = exact_bt_radius(c, bt_incident_cost(b, seed, v), n, params);
    }
    return radius;
}

DpResult banded_dp_bt(const BetweennessInstance& b, const Ranking& seed, const RadiusMap& radius,
                      const DpLimits& limits) {
    Band band(seed, radius);
    BtCoster coster(b, band);
    DpResult result = detail::banded_dp_engine(band, limits, coster);
    if (bt_cost(b, result.ranking) != result.cost) {
        throw std::logic_error("banded_dp_bt: prefix costs did not telescope to the triple cost");
    }
    return result;
}

namespace {

struct PassResult {
    Ranking ranking;
    Cost cost = std::numeric_limits<Cost>::max();
    int psi = 0;
    std::uint64_t states = 0;
    bool full_band = false;
    bool ran = false;
};

PassResult run_pass(const BetweennessInstance& b, const CandidateSet& candidates, Cost good_cost,
                    const BtRadiusParams& params, const DpLimits& limits) {
    PassResult out;
    int blocked_psi = 0;
    for (const Candidate& cand : candidates.entries) {
        if (cand.cost > 2 * good_cost) continue;
        RadiusMap radius = bt_radii(b, cand.ranking, params);
        bool full = true;
        for (int r : radius) full = full && r >= b.size();
        try {
            DpResult dp = banded_dp_bt(b, cand.ranking, radius, limits);
            Band band(cand.ranking, radius);
            out.ran = true;
            out.psi = std::max(out.psi, band.psi());
            out.states += dp.states;
            out.full_band = out.full_band || full;
            if (dp.cost < out.cost) {
                out.cost = dp.cost;
                out.ranking = dp.ranking;
            }
        } catch (const ResourceLimit& e) {
            blocked_psi = std::max(blocked_psi, e.psi);
        }
    }
    if (!out.ran) {
        throw ResourceLimit(blocked_psi, "betweenness band too wide for every candidate seed");
    }
    return out;
}

}  // namespace

SolveReport solve_betweenness(const BetweennessInstance& b, const BtSolveOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    CandidateSet candidates =
        candidate_rankings(b, options.seed, options.restarts, options.max_candidates);
    const Cost good_cost = candidates.entries.front().cost;

    SolveReport report;
    report.denom = 1;
    report.kernel_n = b.size();
    report.seed_cost = good_cost;

    BtRadiusParams params = options.params;
    PassResult pass = run_pass(b, candidates, good_cost, params, options.limits);
    report.psi = pass.psi;
    report.dp_states = pass.states;

    if (options.escalate && !pass.full_band && pass.cost != 0) {
        PassResult prev = pass;
        bool settled = false;
        for (int round = 0; round < options.max_doublings; ++round) {
            params = params.doubled();
            PassResult cur = run_pass(b, candidates, good_cost, params, options.limits);
            report.psi = std::max(report.psi, cur.psi);
            report.dp_states += cur.states;
            if (cur.cost > prev.cost) {
                // Only possible when a candidate that held the minimum got
                // blocked by the band guards at the wider radii.
                throw ResourceLimit(std::max(report.psi, cur.psi),
                                    "band guards tripped during escalation");
            }
            if (cur.full_band || cur.cost == 0 || cur.cost == prev.cost) {
                pass = cur;
                settled = true;
                break;
            }
            prev = cur;
            pass = cur;
        }
        if (!settled) {
            throw ResourceLimit(report.psi,
                                "escalation ran out of doublings before costs agreed");
        }
    }

    report.ranking = pass.ranking;
    report.cost = pass.cost;
    report.certified = pass.full_band || pass.cost == 0;
    report.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return report;
}

}  // namespace tourrank
