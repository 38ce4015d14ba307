#pragma once

#include <cstdint>
#include <vector>

#include "tourrank/ranking.hpp"
#include "tourrank/tournament.hpp"
#include "tourrank/types.hpp"

namespace tourrank {

// Unweighted digraph keeping, for each pair, the heavier arc. Ties go to the
// lower vertex id so the construction is deterministic.
class MajorityTournament {
public:
    explicit MajorityTournament(const WeightedTournament& t);

    int size() const { return n_; }
    bool arc(Vertex u, Vertex v) const;

    // Number of directed 3-cycles containing the arc (u,v). Requires arc(u,v).
    int triangles_through(Vertex u, Vertex v) const;
    bool in_triangle(Vertex v) const;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> out_;  // row-major adjacency bitsets
    std::vector<std::uint64_t> in_;

    const std::uint64_t* out_row(Vertex v) const { return &out_[static_cast<std::size_t>(v) * words_]; }
    const std::uint64_t* in_row(Vertex v) const { return &in_[static_cast<std::size_t>(v) * words_]; }
};

// One rule-1 elimination: v was in no majority triangle; preds/succs hold the
// majority predecessors and successors among the vertices alive at that point.
struct KernelRemoval {
    Vertex v;
    std::vector<Vertex> preds;
    std::vector<Vertex> succs;
};

struct KernelResult {
    WeightedTournament kernel;
    Cost shift = 0;                    // OPT(original) = OPT(kernel) + shift
    std::vector<Vertex> vertex_map;    // kernel vertex -> original vertex
    std::vector<KernelRemoval> removals;
    int original_n = 0;

    // Extends an optimal ranking of the kernel to an optimal ranking of the
    // original instance by re-inserting eliminated vertices in reverse order,
    // each between its majority predecessors and successors.
    Ranking lift(const Ranking& kernel_ranking) const;
};

// Reduces the instance by exhaustively applying two rules against the majority
// tournament: eliminate vertices in no triangle, and pre-pay arcs sitting in
// more than 2*budget triangles (budget in units of 1/denom, i.e. the cost of a
// constant-factor approximate ranking). Requires budget >= OPT.
KernelResult kernelize(const WeightedTournament& t, Cost budget);

}  // namespace tourrank
