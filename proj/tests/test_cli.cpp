#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tourrank/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::vector<const char*> argv{"tourrank"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = tourrank::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path);
    file << content;
    return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const std::string kChain5 = "tour 5\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
const std::string kCycle = "tour 3\n0 1\n1 2\n2 0\n";
const std::string kB1 =
    "bt 4\n0 1 2 0\n0 1 3 1\n0 2 3 2\n1 2 3 2\n";

}  // namespace

TEST_CASE("solve-fast reports rankings and exact costs") {
    auto chain = run({"solve-fast", write_temp("cli_chain5.txt", kChain5)});
    CHECK(chain.code == 0);
    CHECK(contains(chain.out, "ranking 0 1 2 3 4"));
    CHECK(contains(chain.out, "cost 0/1"));

    auto cyc = run({"solve-fast", write_temp("cli_cyc.txt", kCycle)});
    CHECK(cyc.code == 0);
    CHECK(contains(cyc.out, "cost 1/1"));

    auto json = run({"solve-fast", write_temp("cli_cyc.txt", kCycle), "--json"});
    CHECK(json.code == 0);
    CHECK(contains(json.out, "\"cost_num\":1"));
}

TEST_CASE("malformed instances exit 2 with the line number") {
    auto bad = run({"solve-fast",
                    write_temp("cli_bad.txt", "fast 3 2\nw 0 1 1\nw 0 2 9\nw 1 2 1\n")});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "line 3"));

    auto missing = run({"solve-bt", write_temp("cli_badbt.txt", "bt 4\n0 1 2 1\n")});
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "missing triple"));

    auto nofile = run({"solve-fast", "/nonexistent/instance.txt"});
    CHECK(nofile.code == 2);
}

TEST_CASE("band guard exits 3") {
    auto blocked = run({"solve-fast", write_temp("cli_cyc.txt", kCycle), "--psi-cap", "1"});
    CHECK(blocked.code == 3);
    CHECK(contains(blocked.err, "band too wide"));
}

TEST_CASE("aggregate reports the distance sum and the average fraction") {
    auto p1 = run({"aggregate", write_temp("cli_p1.txt", "a b c\na b c\nb a c\n")});
    CHECK(p1.code == 0);
    CHECK(contains(p1.out, "ranking a b c"));
    CHECK(contains(p1.out, "cost 1/3"));
    CHECK(contains(p1.out, "sum_distance 1"));

    auto single = run({"aggregate", write_temp("cli_single.txt", "x y\n")});
    CHECK(single.code == 0);
    CHECK(contains(single.out, "cost 0/1"));

    auto unknown = run({"aggregate", write_temp("cli_unk.txt", "a b c\na b d\n")});
    CHECK(unknown.code == 2);
    CHECK(contains(unknown.err, "unknown candidate"));
}

TEST_CASE("solve-bt reports plain integer costs") {
    std::ostringstream chain6;
    {
        auto gen = run({"gen", "bt-flips", "6", "0", "1"});
        REQUIRE(gen.code == 0);
        chain6 << gen.out;
    }
    auto b0 = run({"solve-bt", write_temp("cli_b0.txt", chain6.str())});
    CHECK(b0.code == 0);
    CHECK(contains(b0.out, "cost 0"));

    auto b1 = run({"solve-bt", write_temp("cli_b1.txt", kB1), "--escalate"});
    CHECK(b1.code == 0);
    CHECK(contains(b1.out, "cost 1"));
}

TEST_CASE("kernelize and oracle subcommands") {
    auto chain = run({"kernelize", write_temp("cli_chain5.txt", kChain5)});
    CHECK(chain.code == 0);
    CHECK(contains(chain.out, "kernel 0 vertices, shift 0/1"));

    auto cyc = run({"kernelize", write_temp("cli_cyc.txt", kCycle)});
    CHECK(cyc.code == 0);
    CHECK(contains(cyc.out, "kernel 3 vertices"));

    auto bt = run({"oracle", write_temp("cli_b1.txt", kB1)});
    CHECK(bt.code == 0);
    CHECK(contains(bt.out, "cost 1"));

    auto fast = run({"oracle", write_temp("cli_cyc.txt", kCycle), "--subset"});
    CHECK(fast.code == 0);
    CHECK(contains(fast.out, "cost 1/1"));
}

TEST_CASE("gen emits parseable deterministic instances") {
    auto a = run({"gen", "fast-flips", "12", "4", "9"});
    auto b = run({"gen", "fast-flips", "12", "4", "9"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    auto solved = run({"solve-fast", write_temp("cli_gen.txt", a.out)});
    CHECK(solved.code == 0);

    auto chain = run({"gen", "fast-flips", "5", "0", "3"});
    CHECK(chain.out == kChain5);

    auto bad = run({"gen", "fast-flips", "4", "100", "1"});
    CHECK(bad.code == 2);
}

TEST_CASE("bench emits the fixed csv header and stable rows") {
    auto a = run({"bench", "--problem", "fast", "--n", "30", "--k", "0", "2", "--seed", "5"});
    CHECK(a.code == 0);
    CHECK(contains(a.out, "problem,n,k,opt_num,opt_den,psi,dp_states,millis"));
    CHECK(contains(a.out, "fast,30,0,0,1,0,"));

    // identical seeds reproduce everything except the timing column
    auto b = run({"bench", "--problem", "fast", "--n", "30", "--k", "0", "2", "--seed", "5"});
    auto strip_millis = [](const std::string& csv) {
        std::istringstream in(csv);
        std::string line, acc;
        while (std::getline(in, line)) {
            acc += line.substr(0, line.rfind(','));
            acc += '\n';
        }
        return acc;
    };
    CHECK(strip_millis(a.out) == strip_millis(b.out));
}
