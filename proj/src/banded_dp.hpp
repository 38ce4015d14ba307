#pragma once

// Internal machinery shared by the two banded dynamic programs. States are
// valid prefix sets keyed by (size, bitmask over the size's window); the
// forced part of each prefix is implied by the size and never stored.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "tourrank/band.hpp"
#include "tourrank/fast_solver.hpp"
#include "tourrank/types.hpp"

namespace tourrank::detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Open-addressed mask -> cost table with min-relaxation. Keys are stored +1 so
// mask 0 is representable.
class MaskTable {
public:
    MaskTable() { rehash(16); }

    void relax_min(std::uint64_t key, Cost val) {
        if ((count_ + 1) * 2 > keys_.size()) grow();
        std::size_t i = mix64(key) & mask_;
        while (keys_[i] != 0) {
            if (keys_[i] == key + 1) {
                if (val < vals_[i]) vals_[i] = val;
                return;
            }
            i = (i + 1) & mask_;
        }
        keys_[i] = key + 1;
        vals_[i] = val;
        ++count_;
    }

    const Cost* find(std::uint64_t key) const {
        std::size_t i = mix64(key) & mask_;
        while (keys_[i] != 0) {
            if (keys_[i] == key + 1) return &vals_[i];
            i = (i + 1) & mask_;
        }
        return nullptr;
    }

    std::size_t size() const { return count_; }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            if (keys_[i] != 0) f(keys_[i] - 1, vals_[i]);
        }
    }

private:
    std::vector<std::uint64_t> keys_;
    std::vector<Cost> vals_;
    std::size_t mask_ = 0;
    std::size_t count_ = 0;

    void rehash(std::size_t cap) {
        keys_.assign(cap, 0);
        vals_.assign(cap, 0);
        mask_ = cap - 1;
        count_ = 0;
    }

    void grow() {
        std::vector<std::uint64_t> old_keys = std::move(keys_);
        std::vector<Cost> old_vals = std::move(vals_);
        rehash(old_keys.size() * 2);
        for (std::size_t i = 0; i < old_keys.size(); ++i) {
            if (old_keys[i] == 0) continue;
            std::size_t j = mix64(old_keys[i] - 1) & mask_;
            while (keys_[j] != 0) j = (j + 1) & mask_;
            keys_[j] = old_keys[i];
            vals_[j] = old_vals[i];
            ++count_;
        }
    }
};

// Coster contract:
//   void begin_layer(int s)                      called once per size, ascending
//   Cost transition(uint64_t prev_mask, uint64_t cur_mask, Vertex v, int s)
//       cost of appending v at position s; prev_mask over window(s-1) encodes
//       S' \ forced(s-1), cur_mask over window(s) encodes S \ forced(s)
//   Cost direct_cost(const std::vector<char>& in_prefix, Vertex v)
//       same quantity computed from an explicit membership vector of S = S'+v
//       (in_prefix marks S including v); used by the reconstruction walk
template <class Coster>
DpResult banded_dp_engine(const Band& band, const DpLimits& limits, Coster& coster) {
    const int n = band.n();
    if (band.psi() > limits.psi_cap || band.psi() > 63) {
        throw ResourceLimit(band.psi(), "band too wide: psi=" + std::to_string(band.psi()) +
                                            " exceeds cap " + std::to_string(limits.psi_cap));
    }

    std::vector<MaskTable> layers(n + 1);
    layers[0].relax_min(0, 0);
    std::uint64_t states = 1;

    std::vector<int> remap;
    std::vector<int> ent_prev;
    for (int s = 1; s <= n; ++s) {
        coster.begin_layer(s);
        const auto& wprev = band.window(s - 1);
        const auto& wcur = band.window(s);
        const auto& entrants = band.forced_entrants(s);

        remap.assign(wprev.size(), -1);
        for (std::size_t j = 0; j < wprev.size(); ++j) {
            remap[j] = band.window_index(s, wprev[j]);
        }
        ent_prev.assign(entrants.size(), -1);
        for (std::size_t i = 0; i < entrants.size(); ++i) {
            ent_prev[i] = band.window_index(s - 1, entrants[i]);
        }

        MaskTable& out = layers[s];
        layers[s - 1].for_each([&](std::uint64_t pm, Cost pc) {
            std::uint64_t base = 0;
            for (std::uint64_t bits = pm; bits != 0; bits &= bits - 1) {
                int j = std::countr_zero(bits);
                if (remap[j] >= 0) base |= 1ull << remap[j];
            }
            // Vertices forced at this size but absent from S' must be the one
            // appended now; two or more of them means S' has no extension.
            int missing = 0;
            Vertex forced_v = -1;
            for (std::size_t i = 0; i < entrants.size(); ++i) {
                bool present = ent_prev[i] >= 0 && ((pm >> ent_prev[i]) & 1);
                if (!present) {
                    ++missing;
                    forced_v = entrants[i];
                    if (missing > 1) return;
                }
            }
            if (missing == 1) {
                out.relax_min(base, pc + coster.transition(pm, base, forced_v, s));
            } else {
                for (std::size_t tidx = 0; tidx < wcur.size(); ++tidx) {
                    if ((base >> tidx) & 1) continue;
                    std::uint64_t cm = base | (1ull << tidx);
                    out.relax_min(cm, pc + coster.transition(pm, cm, wcur[tidx], s));
                }
            }
        });

        states += out.size();
        if (out.size() == 0) {
            throw std::logic_error("banded dp: no valid prefix of size " + std::to_string(s));
        }
        if (states > limits.max_states) {
            throw ResourceLimit(band.psi(), "dp state budget exceeded (" + std::to_string(states) +
                                                " states, cap " +
                                                std::to_string(limits.max_states) + ")");
        }
    }

    const std::uint64_t full = band.window(n).empty()
                                   ? 0
                                   : (~0ull >> (64 - band.window(n).size()));
    const Cost* best = layers[n].find(full);
    if (best == nullptr) throw std::logic_error("banded dp: final state missing");

    // Reconstruction walk; no parent pointers are stored. At each size the
    // appended vertex is any cost-consistent one, smallest seed position first.
    std::vector<char> in_set(n, 1);
    std::vector<Vertex> order(n, -1);
    Cost cur_cost = *best;
    const Ranking& seed = band.seed();
    for (int s = n; s >= 1; --s) {
        // A member whose eligibility starts exactly at this size cannot move
        // into the smaller prefix, so it must be the appended vertex.
        Vertex late = -1;
        int late_count = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (in_set[v] && seed.position(v) - band.radius(v) == s) {
                late = v;
                ++late_count;
            }
        }
        if (late_count > 1) throw std::logic_error("banded dp: inconsistent prefix");

        Vertex chosen = -1;
        Cost chosen_prev = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (!in_set[v] || band.is_forced(s - 1, v)) continue;
            if (late >= 0 && v != late) continue;
            Cost tc = coster.direct_cost(in_set, v);
            std::uint64_t pmask = 0;
            const auto& wp = band.window(s - 1);
            for (std::size_t j = 0; j < wp.size(); ++j) {
                if (in_set[wp[j]] && wp[j] != v) pmask |= 1ull << j;
            }
            const Cost* pc = layers[s - 1].find(pmask);
            if (pc != nullptr && *pc + tc == cur_cost) {
                if (chosen < 0 || seed.position(v) < seed.position(chosen)) {
                    chosen = v;
                    chosen_prev = *pc;
                }
            }
        }
        if (chosen < 0) throw std::logic_error("banded dp: reconstruction failed");
        order[s - 1] = chosen;
        in_set[chosen] = 0;
        cur_cost = chosen_prev;
    }

    return {Ranking::of_order(std::move(order)), *best, states};
}

}  // namespace tourrank::detail
