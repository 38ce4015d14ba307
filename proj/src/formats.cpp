#include "tourrank/formats.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace tourrank {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

// Content lines with `#` comments stripped, tokenized, blank lines dropped.
std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        Line line{number, {}};
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

long long parse_int(const Line& line, std::size_t idx, const std::string& what) {
    const std::string& tok = line.tokens[idx];
    try {
        std::size_t used = 0;
        long long value = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line.number, "expected " + what + ", got '" + tok + "'");
    }
}

Vertex parse_vertex(const Line& line, std::size_t idx, int n) {
    long long v = parse_int(line, idx, "a vertex id");
    if (v < 0 || v >= n) {
        throw ParseError(line.number, "vertex id " + std::to_string(v) + " out of range 0.." +
                                          std::to_string(n - 1));
    }
    return static_cast<Vertex>(v);
}

void expect_arity(const Line& line, std::size_t arity) {
    if (line.tokens.size() != arity) {
        throw ParseError(line.number, "expected " + std::to_string(arity) + " fields, got " +
                                          std::to_string(line.tokens.size()));
    }
}

WeightedTournament parse_fast_lines(const std::vector<Line>& lines) {
    const Line& head = lines.front();
    const bool weighted = head.tokens[0] == "fast";
    expect_arity(head, weighted ? 3 : 2);
    long long n = parse_int(head, 1, "the vertex count");
    if (n < 1) throw ParseError(head.number, "need at least one vertex");
    long long denom = weighted ? parse_int(head, 2, "the denominator") : 1;
    if (denom < 1) throw ParseError(head.number, "denominator must be positive");

    WeightedTournament t(static_cast<int>(n), denom);
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    auto mark = [&](const Line& line, Vertex u, Vertex v) {
        if (u == v) throw ParseError(line.number, "self-pair");
        auto idx = static_cast<std::size_t>(std::min(u, v)) * n + std::max(u, v);
        if (seen[idx]) {
            throw ParseError(line.number, "duplicate pair (" + std::to_string(u) + "," +
                                              std::to_string(v) + ")");
        }
        seen[idx] = 1;
    };

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (weighted) {
            if (line.tokens[0] != "w") throw ParseError(line.number, "expected a 'w' line");
            expect_arity(line, 4);
            Vertex u = parse_vertex(line, 1, static_cast<int>(n));
            Vertex v = parse_vertex(line, 2, static_cast<int>(n));
            long long num = parse_int(line, 3, "a weight numerator");
            if (num < 0 || num > denom) {
                throw ParseError(line.number, "numerator " + std::to_string(num) +
                                                  " outside 0.." + std::to_string(denom));
            }
            mark(line, u, v);
            t.set_pair(u, v, num);
        } else {
            expect_arity(line, 2);
            Vertex u = parse_vertex(line, 0, static_cast<int>(n));
            Vertex v = parse_vertex(line, 1, static_cast<int>(n));
            mark(line, u, v);
            t.set_pair(u, v, 1);
        }
    }

    const int last_line = lines.back().number;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!seen[static_cast<std::size_t>(u) * n + v]) {
                throw ParseError(last_line, "missing pair (" + std::to_string(u) + "," +
                                                std::to_string(v) + ")");
            }
        }
    }
    return t;
}

BetweennessInstance parse_bt_lines(const std::vector<Line>& lines) {
    const Line& head = lines.front();
    expect_arity(head, 2);
    long long n = parse_int(head, 1, "the vertex count");
    if (n < 1) throw ParseError(head.number, "need at least one vertex");

    BetweennessInstance b(static_cast<int>(n));
    std::map<std::array<Vertex, 3>, int> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        expect_arity(line, 4);
        Vertex u = parse_vertex(line, 0, static_cast<int>(n));
        Vertex v = parse_vertex(line, 1, static_cast<int>(n));
        Vertex w = parse_vertex(line, 2, static_cast<int>(n));
        Vertex m = parse_vertex(line, 3, static_cast<int>(n));
        std::array<Vertex, 3> key{u, v, w};
        std::sort(key.begin(), key.end());
        if (key[0] == key[1] || key[1] == key[2]) {
            throw ParseError(line.number, "triple has repeated vertices");
        }
        if (m != u && m != v && m != w) {
            throw ParseError(line.number, "designated middle is not in the triple");
        }
        if (seen.count(key)) throw ParseError(line.number, "duplicate triple");
        seen[key] = line.number;
        b.set_middle(u, v, w, m);
    }

    const int last_line = lines.back().number;
    if (seen.size() != b.triple_count()) {
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = i + 1; j < n; ++j) {
                for (Vertex k = j + 1; k < n; ++k) {
                    if (!seen.count({i, j, k})) {
                        throw ParseError(last_line, "missing triple (" + std::to_string(i) + "," +
                                                        std::to_string(j) + "," +
                                                        std::to_string(k) + ")");
                    }
                }
            }
        }
    }
    return b;
}

}  // namespace

WeightedTournament parse_fast(std::istream& in) {
    auto lines = read_lines(in);
    if (lines.empty()) throw ParseError(1, "empty instance");
    const std::string& kind = lines.front().tokens[0];
    if (kind != "fast" && kind != "tour") {
        throw ParseError(lines.front().number, "expected a 'fast' or 'tour' header");
    }
    return parse_fast_lines(lines);
}

BetweennessInstance parse_bt(std::istream& in) {
    auto lines = read_lines(in);
    if (lines.empty()) throw ParseError(1, "empty instance");
    if (lines.front().tokens[0] != "bt") {
        throw ParseError(lines.front().number, "expected a 'bt' header");
    }
    return parse_bt_lines(lines);
}

std::variant<WeightedTournament, BetweennessInstance> parse_instance(std::istream& in) {
    auto lines = read_lines(in);
    if (lines.empty()) throw ParseError(1, "empty instance");
    const std::string& kind = lines.front().tokens[0];
    if (kind == "fast" || kind == "tour") return parse_fast_lines(lines);
    if (kind == "bt") return parse_bt_lines(lines);
    throw ParseError(lines.front().number, "unknown header '" + kind + "'");
}

VoteProfile parse_votes(std::istream& in) {
    auto lines = read_lines(in);
    if (lines.empty()) throw ParseError(1, "votes file has no votes");

    VoteProfile profile;
    std::map<std::string, Vertex> ids;
    profile.candidates = lines.front().tokens;
    for (std::size_t i = 0; i < profile.candidates.size(); ++i) {
        if (ids.count(profile.candidates[i])) {
            throw ParseError(lines.front().number,
                             "candidate '" + profile.candidates[i] + "' repeated");
        }
        ids[profile.candidates[i]] = static_cast<Vertex>(i);
    }

    const int m = static_cast<int>(profile.candidates.size());
    for (const Line& line : lines) {
        if (static_cast<int>(line.tokens.size()) != m) {
            throw ParseError(line.number, "vote has " + std::to_string(line.tokens.size()) +
                                              " candidates, expected " + std::to_string(m));
        }
        std::vector<Vertex> order;
        std::vector<char> used(m, 0);
        for (const std::string& name : line.tokens) {
            auto it = ids.find(name);
            if (it == ids.end()) {
                throw ParseError(line.number, "unknown candidate '" + name + "'");
            }
            if (used[it->second]) {
                throw ParseError(line.number, "candidate '" + name + "' repeated in vote");
            }
            used[it->second] = 1;
            order.push_back(it->second);
        }
        profile.votes.push_back(Ranking::of_order(std::move(order)));
    }
    return profile;
}

void print_fast(std::ostream& out, const WeightedTournament& t) {
    const int n = t.size();
    if (t.denom() == 1) {
        out << "tour " << n << "\n";
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (t.weight(u, v) == 1) {
                    out << u << " " << v << "\n";
                } else {
                    out << v << " " << u << "\n";
                }
            }
        }
        return;
    }
    out << "fast " << n << " " << t.denom() << "\n";
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            out << "w " << u << " " << v << " " << t.weight(u, v) << "\n";
        }
    }
}

void print_bt(std::ostream& out, const BetweennessInstance& b) {
    const int n = b.size();
    out << "bt " << n << "\n";
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            for (Vertex k = j + 1; k < n; ++k) {
                out << i << " " << j << " " << k << " " << b.middle(i, j, k) << "\n";
            }
        }
    }
}

void print_votes(std::ostream& out, const VoteProfile& p) {
    for (const Ranking& vote : p.votes) {
        for (int pos = 1; pos <= vote.size(); ++pos) {
            out << (pos > 1 ? " " : "") << p.candidates[vote.at(pos)];
        }
        out << "\n";
    }
}

}  // namespace tourrank
