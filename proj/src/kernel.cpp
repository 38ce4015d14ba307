#include "tourrank/kernel.hpp"

#include <bit>
#include <stdexcept>

namespace tourrank {

MajorityTournament::MajorityTournament(const WeightedTournament& t)
    : n_(t.size()), words_((t.size() + 63) / 64) {
    out_.assign(static_cast<std::size_t>(n_) * words_, 0);
    in_.assign(static_cast<std::size_t>(n_) * words_, 0);
    auto add = [&](Vertex u, Vertex v) {
        out_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
        in_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
    };
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            if (t.weight(u, v) >= t.weight(v, u)) {
                add(u, v);  // ties go to the lower id
            } else {
                add(v, u);
            }
        }
    }
}

bool MajorityTournament::arc(Vertex u, Vertex v) const {
    return (out_row(u)[v / 64] >> (v % 64)) & 1;
}

int MajorityTournament::triangles_through(Vertex u, Vertex v) const {
    if (!arc(u, v)) throw std::invalid_argument("triangles_through: (u,v) is not a majority arc");
    // u -> v -> x -> u, so x ranges over out(v) & in(u)
    int count = 0;
    const std::uint64_t* ov = out_row(v);
    const std::uint64_t* iu = in_row(u);
    for (int w = 0; w < words_; ++w) count += std::popcount(ov[w] & iu[w]);
    return count;
}

bool MajorityTournament::in_triangle(Vertex v) const {
    const std::uint64_t* ov = out_row(v);
    const std::uint64_t* iv = in_row(v);
    for (Vertex x = 0; x < n_; ++x) {
        if (!((ov[x / 64] >> (x % 64)) & 1)) continue;
        const std::uint64_t* ox = out_row(x);
        for (int w = 0; w < words_; ++w) {
            if (ox[w] & iv[w]) return true;
        }
    }
    return false;
}

namespace {

WeightedTournament restrict_to(const WeightedTournament& t, const std::vector<Vertex>& keep) {
    WeightedTournament sub(static_cast<int>(keep.size()), t.denom());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            sub.set_pair(static_cast<Vertex>(i), static_cast<Vertex>(j),
                         t.weight(keep[i], keep[j]));
        }
    }
    return sub;
}

}  // namespace

KernelResult kernelize(const WeightedTournament& t, Cost budget) {
    const Cost denom = t.denom();
    if (budget < 0) throw std::invalid_argument("kernelize: negative budget");

    WeightedTournament cur = t;
    std::vector<Vertex> cur_map(t.size());
    for (Vertex v = 0; v < t.size(); ++v) cur_map[v] = v;

    KernelResult result{cur, 0, cur_map, {}, t.size()};
    // Each payment adds at least ceil(denom/2) >= 1 to the shift, and a valid
    // budget caps the total shift at the optimum, so this bound is generous.
    long long rule2_left = 2ll * t.size() * t.size() + 16;

    bool changed = true;
    while (changed) {
        changed = false;

        // Rule 2: pre-pay a majority arc sitting in more than 2*budget triangles
        // (strict, in de-scaled units: count * denom > 2 * budget). The majority
        // tournament is rebuilt after every weight change.
        for (bool applied = true; applied;) {
            applied = false;
            MajorityTournament m(cur);
            const int n = cur.size();
            for (Vertex u = 0; u < n && !applied; ++u) {
                for (Vertex v = 0; v < n && !applied; ++v) {
                    if (u == v || !m.arc(u, v)) continue;
                    long long tri = m.triangles_through(u, v);
                    if (static_cast<__int128>(tri) * denom > static_cast<__int128>(2) * budget) {
                        result.shift += cur.weight(u, v);
                        cur.set_pair(u, v, 0);
                        applied = true;
                        changed = true;
                        if (--rule2_left < 0) {
                            throw std::runtime_error(
                                "kernelize: arc payments did not converge; budget below optimum?");
                        }
                    }
                }
            }
        }

        // Rule 1: eliminate every vertex in no majority triangle. Removals never
        // create triangles, so one batch against the current majority tournament
        // is exhaustive for this round.
        MajorityTournament m(cur);
        const int n = cur.size();
        std::vector<char> removed(n, 0);
        bool any_removed = false;
        for (Vertex v = 0; v < n; ++v) {
            if (m.in_triangle(v)) continue;
            KernelRemoval rem;
            rem.v = cur_map[v];
            for (Vertex u = 0; u < n; ++u) {
                if (u == v || removed[u]) continue;
                result.shift += std::min(cur.weight(u, v), cur.weight(v, u));
                if (m.arc(u, v)) {
                    rem.preds.push_back(cur_map[u]);
                } else {
                    rem.succs.push_back(cur_map[u]);
                }
            }
            result.removals.push_back(std::move(rem));
            removed[v] = 1;
            any_removed = true;
        }
        if (any_removed) {
            changed = true;
            std::vector<Vertex> keep;
            std::vector<Vertex> next_map;
            for (Vertex v = 0; v < n; ++v) {
                if (!removed[v]) {
                    keep.push_back(v);
                    next_map.push_back(cur_map[v]);
                }
            }
            cur = restrict_to(cur, keep);
            cur_map = std::move(next_map);
        }
    }

    result.kernel = std::move(cur);
    result.vertex_map = std::move(cur_map);
    return result;
}

Ranking KernelResult::lift(const Ranking& kernel_ranking) const {
    if (kernel_ranking.size() != kernel.size()) {
        throw std::invalid_argument("KernelResult::lift: ranking size mismatch");
    }
    std::vector<Vertex> order;
    order.reserve(original_n);
    for (Vertex v : kernel_ranking.order()) order.push_back(vertex_map[v]);

    // Undo eliminations last-first. Stably moving the recorded predecessors in
    // front of the successors never raises the cost (every predecessor beats
    // every successor, or the pair is tied), and it opens the slot where the
    // eliminated vertex pays only the lighter arc of each of its pairs.
    std::vector<char> is_pred(original_n, 0);
    for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
        if (it->preds.size() + it->succs.size() != order.size()) {
            throw std::logic_error("KernelResult::lift: removal record out of sync");
        }
        for (Vertex p : it->preds) is_pred[p] = 1;
        std::vector<Vertex> next;
        next.reserve(order.size() + 1);
        for (Vertex u : order) {
            if (is_pred[u]) next.push_back(u);
        }
        next.push_back(it->v);
        for (Vertex u : order) {
            if (!is_pred[u]) next.push_back(u);
        }
        for (Vertex p : it->preds) is_pred[p] = 0;
        order = std::move(next);
    }
    return Ranking::of_order(std::move(order));
}

}  // namespace tourrank
