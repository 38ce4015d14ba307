#include "tourrank/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tourrank/bench.hpp"
#include "tourrank/betweenness.hpp"
#include "tourrank/fast_solver.hpp"
#include "tourrank/formats.hpp"
#include "tourrank/gen.hpp"
#include "tourrank/kernel.hpp"
#include "tourrank/kra.hpp"
#include "tourrank/oracle.hpp"

namespace tourrank {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return in;
}

void print_ranking_ids(std::ostream& out, const Ranking& r) {
    out << "ranking";
    for (Vertex v : r.order()) out << " " << v;
    out << "\n";
}

void print_ranking_names(std::ostream& out, const Ranking& r,
                         const std::vector<std::string>& names) {
    out << "ranking";
    for (Vertex v : r.order()) out << " " << names[v];
    out << "\n";
}

nlohmann::json report_json(const SolveReport& report) {
    nlohmann::json j;
    j["ranking"] = report.ranking.order();
    j["cost_num"] = report.cost;
    j["cost_den"] = report.denom;
    j["kernel_shift_num"] = report.kernel_shift;
    j["kernel_n"] = report.kernel_n;
    j["psi"] = report.psi;
    j["dp_states"] = report.dp_states;
    j["seed_cost_num"] = report.seed_cost;
    j["certified"] = report.certified;
    j["millis"] = report.micros / 1000;
    return j;
}

void print_fast_report(std::ostream& out, const SolveReport& report, bool json) {
    if (json) {
        out << report_json(report).dump() << "\n";
        return;
    }
    print_ranking_ids(out, report.ranking);
    out << "cost " << report.cost << "/" << report.denom << "\n";
    out << "psi " << report.psi << "\n";
    out << "dp_states " << report.dp_states << "\n";
    out << "kernel " << report.kernel_n << " vertices, shift " << report.kernel_shift << "/"
        << report.denom << "\n";
    out << "millis " << report.micros / 1000 << "\n";
}

struct DpFlags {
    int psi_cap = DpLimits{}.psi_cap;
    std::uint64_t max_states = DpLimits{}.max_states;

    void attach(CLI::App* cmd) {
        cmd->add_option("--psi-cap", psi_cap, "band width guard (exit 3 when exceeded)");
        cmd->add_option("--max-states", max_states, "dp state budget (exit 3 when exceeded)");
    }
    DpLimits limits() const { return {psi_cap, max_states}; }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact solvers for weighted arc ranking, vote aggregation and betweenness"};
    app.require_subcommand(1);
    std::function<void()> action;

    // solve-fast
    {
        auto* cmd = app.add_subcommand("solve-fast", "solve a fast/tour instance exactly");
        auto path = std::make_shared<std::string>();
        auto flags = std::make_shared<DpFlags>();
        auto dc = std::make_shared<bool>(false);
        auto no_kernel = std::make_shared<bool>(false);
        auto json = std::make_shared<bool>(false);
        cmd->add_option("file", *path, "instance file")->required();
        flags->attach(cmd);
        cmd->add_flag("--dc", *dc, "use the divide-and-conquer variant (polynomial space)");
        cmd->add_flag("--no-kernel", *no_kernel, "skip kernelization");
        cmd->add_flag("--json", *json, "emit a json report");
        cmd->callback([&action, path, flags, dc, no_kernel, json, &out] {
            action = [path, flags, dc, no_kernel, json, &out] {
                auto in = open_input(*path);
                WeightedTournament t = parse_fast(in);
                FastSolveOptions options{flags->limits(), *dc, !*no_kernel};
                print_fast_report(out, solve_fast(t, options), *json);
            };
        });
    }

    // aggregate
    {
        auto* cmd = app.add_subcommand("aggregate", "aggregate a votes file");
        auto path = std::make_shared<std::string>();
        auto flags = std::make_shared<DpFlags>();
        auto json = std::make_shared<bool>(false);
        cmd->add_option("file", *path, "votes file")->required();
        flags->attach(cmd);
        cmd->add_flag("--json", *json, "emit a json report");
        cmd->callback([&action, path, flags, json, &out] {
            action = [path, flags, json, &out] {
                auto in = open_input(*path);
                VoteProfile profile = parse_votes(in);
                FastSolveOptions options{flags->limits(), false, true};
                SolveReport report = aggregate(profile, options);
                if (*json) {
                    nlohmann::json j = report_json(report);
                    std::vector<std::string> names;
                    for (Vertex v : report.ranking.order()) names.push_back(profile.candidates[v]);
                    j["ranking"] = names;
                    out << j.dump() << "\n";
                    return;
                }
                print_ranking_names(out, report.ranking, profile.candidates);
                out << "sum_distance " << report.cost << "\n";
                out << "cost " << report.cost << "/" << report.denom << "\n";
                out << "psi " << report.psi << "\n";
                out << "dp_states " << report.dp_states << "\n";
                out << "millis " << report.micros / 1000 << "\n";
            };
        });
    }

    // solve-bt
    {
        auto* cmd = app.add_subcommand("solve-bt", "solve a betweenness instance");
        auto path = std::make_shared<std::string>();
        auto flags = std::make_shared<DpFlags>();
        auto opts = std::make_shared<BtSolveOptions>();
        auto escalate = std::make_shared<bool>(false);
        auto json = std::make_shared<bool>(false);
        cmd->add_option("file", *path, "instance file")->required();
        flags->attach(cmd);
        cmd->add_option("--seed", opts->seed, "candidate search seed");
        cmd->add_option("--restarts", opts->restarts, "local search restarts");
        cmd->add_option("--candidates", opts->max_candidates, "candidate set size cap");
        cmd->add_option("--alpha1", opts->params.a1_num, "first radius constant");
        cmd->add_option("--alpha2", opts->params.a2_num, "second radius constant");
        cmd->add_flag("--escalate", *escalate, "double the radius constants until costs agree");
        cmd->add_flag("--json", *json, "emit a json report");
        cmd->callback([&action, path, flags, opts, escalate, json, &out] {
            action = [path, flags, opts, escalate, json, &out] {
                auto in = open_input(*path);
                BetweennessInstance b = parse_bt(in);
                BtSolveOptions options = *opts;
                options.limits = flags->limits();
                options.escalate = *escalate;
                SolveReport report = solve_betweenness(b, options);
                if (*json) {
                    out << report_json(report).dump() << "\n";
                    return;
                }
                print_ranking_ids(out, report.ranking);
                out << "cost " << report.cost << "\n";
                out << "psi " << report.psi << "\n";
                out << "dp_states " << report.dp_states << "\n";
                out << "certified " << (report.certified ? "yes" : "no") << "\n";
                out << "millis " << report.micros / 1000 << "\n";
            };
        });
    }

    // kernelize
    {
        auto* cmd = app.add_subcommand("kernelize", "reduce a fast/tour instance");
        auto path = std::make_shared<std::string>();
        auto emit = std::make_shared<bool>(false);
        cmd->add_option("file", *path, "instance file")->required();
        cmd->add_flag("--emit", *emit, "also print the kernel instance");
        cmd->callback([&action, path, emit, &out] {
            action = [path, emit, &out] {
                auto in = open_input(*path);
                WeightedTournament t = parse_fast(in);
                Cost budget = ranking_cost(t, approx_ranking(t));
                KernelResult kr = kernelize(t, budget);
                out << "kernel " << kr.kernel.size() << " vertices, shift " << kr.shift << "/"
                    << t.denom() << "\n";
                if (*emit) print_fast(out, kr.kernel);
            };
        });
    }

    // oracle
    {
        auto* cmd = app.add_subcommand("oracle", "brute-force solve a small instance");
        auto path = std::make_shared<std::string>();
        auto subset = std::make_shared<bool>(false);
        cmd->add_option("file", *path, "instance file (fast/tour/bt)")->required();
        cmd->add_flag("--subset", *subset, "use the subset dp (fast instances, n <= 24)");
        cmd->callback([&action, path, subset, &out] {
            action = [path, subset, &out] {
                auto in = open_input(*path);
                auto instance = parse_instance(in);
                if (std::holds_alternative<WeightedTournament>(instance)) {
                    const auto& t = std::get<WeightedTournament>(instance);
                    auto [cost, ranking] =
                        (*subset || t.size() > 10) ? oracle::subset_dp_fast(t)
                                                   : oracle::brute_force_fast(t);
                    print_ranking_ids(out, ranking);
                    out << "cost " << cost << "/" << t.denom() << "\n";
                } else {
                    const auto& b = std::get<BetweennessInstance>(instance);
                    auto [cost, ranking] = oracle::brute_force_bt(b);
                    print_ranking_ids(out, ranking);
                    out << "cost " << cost << "\n";
                }
            };
        });
    }

    // gen
    {
        auto* cmd = app.add_subcommand("gen", "generate a planted instance");
        auto kind = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto seed = std::make_shared<std::uint64_t>(1);
        cmd->add_option("kind", *kind, "fast-flips or bt-flips")->required();
        cmd->add_option("n", *n, "vertex count")->required();
        cmd->add_option("k", *k, "planted perturbation count")->required();
        cmd->add_option("seed", *seed, "generator seed")->required();
        cmd->callback([&action, kind, n, k, seed, &out] {
            action = [kind, n, k, seed, &out] {
                if (*kind == "fast-flips") {
                    print_fast(out, gen_fast_flips(*n, *k, *seed));
                } else if (*kind == "bt-flips") {
                    print_bt(out, gen_bt_flips(*n, *k, *seed));
                } else {
                    throw std::invalid_argument("unknown generator kind '" + *kind + "'");
                }
            };
        });
    }

    // bench
    {
        auto* cmd = app.add_subcommand("bench", "run a planted-instance sweep, csv on stdout");
        auto config = std::make_shared<BenchConfig>();
        auto flags = std::make_shared<DpFlags>();
        auto escalate = std::make_shared<bool>(false);
        cmd->add_option("--problem", config->problem, "fast or bt")->required();
        cmd->add_option("--n", config->ns, "vertex counts")->required();
        cmd->add_option("--k", config->ks, "perturbation counts")->required();
        cmd->add_option("--reps", config->reps, "instances per (n,k)");
        cmd->add_option("--seed", config->seed, "sweep seed");
        cmd->add_flag("--escalate", *escalate, "escalate betweenness radii");
        flags->attach(cmd);
        cmd->callback([&action, config, flags, escalate, &out] {
            action = [config, flags, escalate, &out] {
                BenchConfig cfg = *config;
                cfg.fast_options.limits = flags->limits();
                cfg.bt_options.limits = flags->limits();
                cfg.bt_options.escalate = *escalate;
                write_bench_csv(out, run_bench(cfg));
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        action();
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace tourrank
