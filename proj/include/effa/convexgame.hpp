#pragma once

#include "effa/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace effa {

/// Distribution over powers a^n of a single letter, zero weights not stored.
using Position = std::map<unsigned, Rational>;

/// split at n: 3 lambda leave n+1, lambda goes to n and 2 lambda to n+2.
/// merge at n is the inverse.
struct Move {
    enum class Dir { split, merge };
    unsigned n = 0;
    Rational lambda;
    Dir dir = Dir::split;

    std::string str() const;
    friend bool operator==(const Move&, const Move&) = default;
};

using Trace = std::vector<Move>;

/// Throws InputError unless the weights are positive and sum to 1.
void validate_position(const Position& p);
std::string to_string(const Position& p);
/// Parses `1/3*0 + 2/3*2` (weight*exponent terms).
Position parse_position(const std::string& text);

/// sum p(n) / 2^n
Rational expected_value(const Position& p);
/// r a^n + (1-r) a^(n+1) with r in (0,1] and value x. Throws InputError outside (0,1].
Position canonical_rep(const Rational& x);
/// Throws IllegalMove when a coefficient would go negative or lambda is not in (0, 1/3].
Position apply_rule(const Position& p, const Move& m);
/// Pairs (n, k), k >= 2, with mass at n and n+k and none strictly between.
std::vector<std::pair<unsigned, unsigned>> find_holes(const Position& p);
bool is_winning(const Position& p);
unsigned range(const Position& p);

/// Patches every hole by splits with lambda = r_{n+k}/4.
std::pair<Position, Trace> spread(const Position& p);
/// One sweep round: strictly smaller range, still without holes.
/// Throws PreconditionError on winning positions or positions with holes.
std::pair<Position, Trace> sweep(const Position& p);
/// Finishes in one merge when one suffices, otherwise spreads and sweeps.
std::pair<Position, Trace> solve(const Position& p);

} // namespace effa
