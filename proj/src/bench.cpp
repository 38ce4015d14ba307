#include "tourrank/bench.hpp"

#include <chrono>
#include <ostream>
#include <stdexcept>

#include "tourrank/band.hpp"
#include "tourrank/gen.hpp"

namespace tourrank {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t row_seed(std::uint64_t base, int n, int k, int rep) {
    return mix(base ^ mix(static_cast<std::uint64_t>(n) << 32 |
                          static_cast<std::uint64_t>(static_cast<std::uint32_t>(k))) ^
               mix(static_cast<std::uint64_t>(rep) + 0x1234));
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    if (config.problem != "fast" && config.problem != "bt") {
        throw std::invalid_argument("run_bench: problem must be 'fast' or 'bt'");
    }
    std::vector<BenchRow> rows;
    for (int n : config.ns) {
        for (int k : config.ks) {
            for (int rep = 0; rep < config.reps; ++rep) {
                const std::uint64_t seed = row_seed(config.seed, n, k, rep);
                BenchRow row;
                row.problem = config.problem;
                row.n = n;
                row.k = k;
                const auto start = std::chrono::steady_clock::now();
                try {
                    if (config.problem == "fast") {
                        WeightedTournament t = gen_fast_flips(n, k, seed);
                        SolveReport report = solve_fast(t, config.fast_options);
                        row.solved = true;
                        row.opt_num = report.cost;
                        row.opt_den = report.denom;
                        row.psi = report.psi;
                        row.dp_states = report.dp_states;
                    } else {
                        BetweennessInstance b = gen_bt_flips(n, k, seed);
                        BtSolveOptions options = config.bt_options;
                        options.seed = seed + 1;
                        SolveReport report = solve_betweenness(b, options);
                        row.solved = true;
                        row.opt_num = report.cost;
                        row.opt_den = 1;
                        row.psi = report.psi;
                        row.dp_states = report.dp_states;
                    }
                } catch (const ResourceLimit& e) {
                    row.solved = false;
                    row.psi = e.psi;
                    row.dp_states = 0;
                }
                row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "problem,n,k,opt_num,opt_den,psi,dp_states,millis\n";
    for (const BenchRow& row : rows) {
        out << row.problem << "," << row.n << "," << row.k << ",";
        if (row.solved) {
            out << row.opt_num << "," << row.opt_den;
        } else {
            out << ",";
        }
        out << "," << row.psi << "," << row.dp_states << "," << row.millis << "\n";
    }
}

}  // namespace tourrank
