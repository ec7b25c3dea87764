#include "effa/convexgame.hpp"

#include "effa/error.hpp"

#include <sstream>

namespace effa {

std::string Move::str() const {
    return std::string(dir == Dir::split ? "split " : "merge ") + std::to_string(n) + " " + lambda.str();
}

void validate_position(const Position& p) {
    Rational total;
    for (const auto& [n, r] : p) {
        if (r.sign() <= 0) {
            throw InputError("position weights must be positive");
        }
        total += r;
    }
    if (total != Rational(1)) {
        throw InputError("position weights sum to " + total.str() + ", not 1");
    }
}

std::string to_string(const Position& p) {
    std::string out;
    for (const auto& [n, r] : p) {
        if (!out.empty()) {
            out += " + ";
        }
        out += r.str() + "*" + std::to_string(n);
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return {};
    }
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

} // namespace

Position parse_position(const std::string& text) {
    Position p;
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, '+')) {
        term = trim(term);
        const auto star = term.find('*');
        if (star == std::string::npos) {
            throw InputError("expected weight*exponent, got '" + term + "'");
        }
        const Rational r = Rational::parse(trim(term.substr(0, star)));
        const std::string e = trim(term.substr(star + 1));
        if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos) {
            throw InputError("bad exponent '" + e + "'");
        }
        p[static_cast<unsigned>(std::stoul(e))] += r;
    }
    validate_position(p);
    return p;
}

Rational expected_value(const Position& p) {
    Rational e;
    for (const auto& [n, r] : p) {
        e += r * Rational::pow2_inv(n);
    }
    return e;
}

Position canonical_rep(const Rational& x) {
    if (x.sign() <= 0 || Rational(1) < x) {
        throw InputError("canonical representatives exist for values in (0,1], not " + x.str());
    }
    unsigned n = 0;
    while (!(Rational::pow2_inv(n + 1) < x)) {
        ++n;
    }
    // x = (1 + r) / 2^(n+1)
    const Rational r = x / Rational::pow2_inv(n + 1) - Rational(1);
    Position p{{n, r}};
    if (r != Rational(1)) {
        p[n + 1] = Rational(1) - r;
    }
    return p;
}

Position apply_rule(const Position& p, const Move& m) {
    if (m.lambda.sign() <= 0 || Rational(1, 3) < m.lambda) {
        throw IllegalMove("lambda must lie in (0, 1/3], got " + m.lambda.str());
    }
    Position q = p;
    auto take = [&](unsigned i, const Rational& v) {
        auto it = q.find(i);
        if (it == q.end() || it->second < v) {
            throw IllegalMove(m.str() + ": not enough weight at " + std::to_string(i));
        }
        it->second -= v;
        if (it->second.is_zero()) {
            q.erase(it);
        }
    };
    auto give = [&](unsigned i, const Rational& v) { q[i] += v; };
    if (m.dir == Move::Dir::split) {
        take(m.n + 1, Rational(3) * m.lambda);
        give(m.n, m.lambda);
        give(m.n + 2, Rational(2) * m.lambda);
    } else {
        take(m.n, m.lambda);
        take(m.n + 2, Rational(2) * m.lambda);
        give(m.n + 1, Rational(3) * m.lambda);
    }
    return q;
}

std::vector<std::pair<unsigned, unsigned>> find_holes(const Position& p) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (auto it = p.begin(); it != p.end(); ++it) {
        auto next = std::next(it);
        if (next != p.end() && next->first - it->first >= 2) {
            out.emplace_back(it->first, next->first - it->first);
        }
    }
    return out;
}

unsigned range(const Position& p) { return p.empty() ? 0 : p.rbegin()->first - p.begin()->first + 1; }

bool is_winning(const Position& p) { return range(p) <= 2; }

std::pair<Position, Trace> spread(const Position& p) {
    Position q = p;
    Trace trace;
    for (auto holes = find_holes(q); !holes.empty(); holes = find_holes(q)) {
        auto [n, k] = holes.front();
        for (; k >= 2; --k) {
            const Move m{n + k - 1, q.at(n + k) / Rational(4), Move::Dir::split};
            q = apply_rule(q, m);
            trace.push_back(m);
        }
    }
    return {q, trace};
}

std::pair<Position, Trace> sweep(const Position& p) {
    if (is_winning(p)) {
        throw PreconditionError("sweeping needs a non-winning position");
    }
    if (!find_holes(p).empty()) {
        throw PreconditionError("sweeping needs a position without holes");
    }
    const unsigned n = p.begin()->first;
    const unsigned k = p.rbegin()->first - n;
    Rational lambda = p.at(n + k) / Rational(2);
    for (unsigned i = 0; i < k; ++i) {
        lambda = min(lambda, p.at(n + i));
    }
    Position q = p;
    Trace trace;
    auto round = [&](const Rational& l) {
        for (unsigned i = n + k - 1; i-- > n;) {
            const Move m{i, l, Move::Dir::merge};
            q = apply_rule(q, m);
            trace.push_back(m);
        }
    };
    auto at = [&](unsigned i) {
        auto it = q.find(i);
        return it == q.end() ? Rational() : it->second;
    };
    // sweep with the same lambda while both ends keep more than one more round
    round(lambda);
    while (lambda < at(n) && Rational(2) * lambda < at(n + k)) {
        round(lambda);
    }
    if (!at(n).is_zero() && !at(n + k).is_zero()) {
        round(min(at(n), at(n + k) / Rational(2)));
    }
    return {q, trace};
}

std::pair<Position, Trace> solve(const Position& p) {
    validate_position(p);
    if (is_winning(p)) {
        return {p, {}};
    }
    // a single merge that empties an end may already win
    for (const auto& [n, r] : p) {
        auto it = p.find(n + 2);
        if (it == p.end()) {
            continue;
        }
        const Move m{n, min(r, it->second / Rational(2)), Move::Dir::merge};
        Position q = apply_rule(p, m);
        if (is_winning(q)) {
            return {q, {m}};
        }
    }
    auto [q, trace] = spread(p);
    while (!is_winning(q)) {
        auto [next, t] = sweep(q);
        q = std::move(next);
        trace.insert(trace.end(), t.begin(), t.end());
    }
    return {q, trace};
}

} // namespace effa
