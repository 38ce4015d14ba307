#pragma once

#include <iosfwd>
#include <variant>

#include "tourrank/betweenness.hpp"
#include "tourrank/kra.hpp"
#include "tourrank/tournament.hpp"
#include "tourrank/types.hpp"

namespace tourrank {

// Text formats. Parsers throw ParseError with the offending line number;
// printers emit the canonical form, so parse(print(x)) == x.
//
//   fast <n> <D>       one line `w <u> <v> <num>` per unordered pair
//   tour <n>           one line `<u> <v>` per pair, meaning w(u,v) = 1, D = 1
//   bt <n>             C(n,3) lines `<u> <v> <w> <m>`, m the designated middle
//   votes              one vote per line, whitespace-separated candidate names
//
// `#` starts a comment in the instance formats.

WeightedTournament parse_fast(std::istream& in);
BetweennessInstance parse_bt(std::istream& in);
VoteProfile parse_votes(std::istream& in);

// Dispatches on the header keyword (fast/tour/bt).
std::variant<WeightedTournament, BetweennessInstance> parse_instance(std::istream& in);

void print_fast(std::ostream& out, const WeightedTournament& t);
void print_bt(std::ostream& out, const BetweennessInstance& b);
void print_votes(std::ostream& out, const VoteProfile& p);

}  // namespace tourrank
