#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tourrank/betweenness.hpp"
#include "tourrank/fast_solver.hpp"

namespace tourrank {

struct BenchRow {
    std::string problem;  // "fast" or "bt"
    int n = 0;
    int k = 0;
    bool solved = false;
    Cost opt_num = 0;
    Cost opt_den = 1;
    int psi = 0;  // reported even when the solve hit a resource guard
    std::uint64_t dp_states = 0;
    std::int64_t millis = 0;
};

struct BenchConfig {
    std::string problem = "fast";
    std::vector<int> ns;
    std::vector<int> ks;
    int reps = 1;
    std::uint64_t seed = 1;
    FastSolveOptions fast_options;
    BtSolveOptions bt_options;
};

// One row per generated planted instance. Rows are deterministic per seed
// except for the millis column.
std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace tourrank
