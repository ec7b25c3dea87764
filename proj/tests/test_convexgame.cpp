#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "effa/convexgame.hpp"
#include "effa/error.hpp"

#include <random>

using namespace effa;

namespace {

using Dir = Move::Dir;

Position random_position(std::mt19937& rng, long denom, unsigned maxexp) {
    Position p;
    long left = denom;
    while (left > 0) {
        const long w = std::uniform_int_distribution<long>(1, left)(rng);
        p[std::uniform_int_distribution<unsigned>(0, maxexp)(rng)] += Rational(w, denom);
        left -= w;
    }
    return p;
}

Position replay(Position p, const Trace& t) {
    for (const auto& m : t) {
        p = apply_rule(p, m);
    }
    return p;
}

} // namespace

TEST_CASE("expected values and canonical representatives") {
    CHECK(expected_value({{1, Rational(1)}}) == Rational(1, 2));
    CHECK(expected_value({{0, Rational(1, 3)}, {2, Rational(2, 3)}}) == Rational(1, 2));
    CHECK(expected_value({{0, Rational(1, 2)}, {3, Rational(1, 2)}}) == Rational(9, 16));

    CHECK(canonical_rep(Rational(1, 2)) == Position{{1, Rational(1)}});
    CHECK(canonical_rep(Rational(1)) == Position{{0, Rational(1)}});
    CHECK(canonical_rep(Rational(9, 16)) == Position{{0, Rational(1, 8)}, {1, Rational(7, 8)}});
    CHECK_THROWS_AS(canonical_rep(Rational(0)), InputError);
    CHECK_THROWS_AS(canonical_rep(Rational(3, 2)), InputError);
    for (long d = 1; d <= 40; ++d) {
        for (long u = 1; u <= d; ++u) {
            const Rational x(u, d);
            const auto c = canonical_rep(x);
            CHECK(expected_value(c) == x);
            CHECK(is_winning(c));
        }
    }
}

TEST_CASE("the rule") {
    const Position p{{0, Rational(1, 3)}, {2, Rational(2, 3)}};
    CHECK(apply_rule(p, {0, Rational(1, 3), Dir::merge}) == Position{{1, Rational(1)}});
    const Position one{{1, Rational(1)}};
    const Move s{0, Rational(1, 6), Dir::split};
    const auto q = apply_rule(one, s);
    CHECK(q == Position{{0, Rational(1, 6)}, {1, Rational(1, 2)}, {2, Rational(1, 3)}});
    CHECK(apply_rule(q, {0, Rational(1, 6), Dir::merge}) == one);
    CHECK_THROWS_AS(apply_rule(one, {0, Rational(1, 2), Dir::split}), IllegalMove);
    CHECK_THROWS_AS(apply_rule(one, {1, Rational(1, 6), Dir::split}), IllegalMove);
    CHECK_THROWS_AS(apply_rule(p, {0, Rational(1, 2), Dir::merge}), IllegalMove);
    CHECK_THROWS_AS(apply_rule(p, {0, Rational(0), Dir::merge}), IllegalMove);
    CHECK(s.str() == "split 0 1/6");

    std::mt19937 rng(3);
    for (int k = 0; k < 200; ++k) {
        const auto r = random_position(rng, 24, 6);
        for (const auto& [n, w] : r) {
            if (n == 0) {
                continue;
            }
            const Move m{n - 1, w / Rational(3), Dir::split};
            const auto t = apply_rule(r, m);
            CHECK(expected_value(t) == expected_value(r));
            CHECK(apply_rule(t, {m.n, m.lambda, Dir::merge}) == r);
            break;
        }
    }
}

TEST_CASE("holes and winning positions") {
    CHECK(find_holes({{0, Rational(1)}}).empty());
    using H = std::vector<std::pair<unsigned, unsigned>>;
    CHECK(find_holes({{0, Rational(1, 2)}, {3, Rational(1, 2)}}) == H{{0, 3}});
    CHECK(find_holes({{0, Rational(1, 2)}, {2, Rational(1, 4)}, {5, Rational(1, 4)}}) == H{{0, 2}, {2, 3}});
    CHECK(is_winning({{5, Rational(1)}}));
    CHECK(is_winning({{0, Rational(1, 8)}, {1, Rational(7, 8)}}));
    CHECK(!is_winning({{0, Rational(1, 2)}, {2, Rational(1, 2)}}));
}

TEST_CASE("spreading") {
    const Position flat{{0, Rational(1, 4)}, {1, Rational(3, 4)}};
    CHECK(spread(flat).first == flat);
    CHECK(spread(flat).second.empty());

    const Position h{{0, Rational(1, 2)}, {3, Rational(1, 2)}};
    const auto [s, t] = spread(h);
    CHECK(find_holes(s).empty());
    CHECK(expected_value(s) == Rational(9, 16));
    CHECK(t.front() == Move{2, Rational(1, 8), Dir::split});
    CHECK(replay(h, t) == s);

    const Position g{{0, Rational(1, 3)}, {2, Rational(2, 3)}};
    const auto [s2, t2] = spread(g);
    REQUIRE(t2.size() == 1);
    CHECK(t2[0] == Move{1, Rational(1, 6), Dir::split});
    CHECK(s2 == Position{{0, Rational(1, 3)}, {1, Rational(1, 6)}, {2, Rational(1, 6)}, {3, Rational(1, 3)}});
}

TEST_CASE("sweeping") {
    const Position p{{0, Rational(1, 4)}, {1, Rational(1, 2)}, {2, Rational(1, 4)}};
    const auto [q, t] = sweep(p);
    CHECK(range(q) <= 2);
    CHECK(expected_value(q) == expected_value(p));
    CHECK(replay(p, t) == q);
    CHECK_THROWS_AS(sweep({{0, Rational(1)}}), PreconditionError);
    CHECK_THROWS_AS(sweep({{0, Rational(1, 2)}, {2, Rational(1, 2)}}), PreconditionError);

    auto cur = spread({{0, Rational(1, 2)}, {3, Rational(1, 2)}}).first;
    while (!is_winning(cur)) {
        const auto next = sweep(cur).first;
        CHECK(range(next) < range(cur));
        CHECK(find_holes(next).empty());
        cur = next;
    }
}

TEST_CASE("solving") {
    const Position g{{0, Rational(1, 3)}, {2, Rational(2, 3)}};
    const auto [a, ta] = solve(g);
    CHECK(a == Position{{1, Rational(1)}});
    CHECK(ta == Trace{{0, Rational(1, 3), Dir::merge}});
    CHECK(solve({{0, Rational(1, 2)}, {3, Rational(1, 2)}}).first ==
          Position{{0, Rational(1, 8)}, {1, Rational(7, 8)}});
    CHECK(solve({{4, Rational(1)}}).first == Position{{4, Rational(1)}});
    CHECK(solve({{4, Rational(1)}}).second.empty());

    std::mt19937 rng(64);
    for (int k = 0; k < 100; ++k) {
        const auto p = random_position(rng, 1 + static_cast<long>(rng() % 64), 8);
        const auto [q, t] = solve(p);
        const Rational e = expected_value(p);
        CHECK(q == canonical_rep(e));
        Position cur = p;
        for (const auto& m : t) {
            cur = apply_rule(cur, m);
            REQUIRE(expected_value(cur) == e);
        }
        CHECK(cur == q);
    }
}

TEST_CASE("position text") {
    const auto p = parse_position("1/3*0 + 2/3*2");
    CHECK(p == Position{{0, Rational(1, 3)}, {2, Rational(2, 3)}});
    CHECK(parse_position(to_string(p)) == p);
    CHECK_THROWS_AS(parse_position("1/3*0"), InputError);
    CHECK_THROWS_AS(parse_position("1*x"), InputError);
    CHECK_THROWS_AS(parse_position("1"), InputError);
}
