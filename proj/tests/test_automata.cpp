#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "effa/automata.hpp"
#include "effa/error.hpp"
#include "generators.hpp"

using namespace effa;
using namespace effa::testing;

namespace {

Word an(std::size_t n) { return Word(n, 0); }

EffAutomaton choice_npfa() {
    EffAutomaton a;
    a.monad = Monad::convex();
    a.kind = OutputKind::max;
    a.states = Carrier({"q0", "q1"});
    a.alphabet = Carrier({"a"});
    a.init = ConvexSet({Dist::dirac(0)});
    a.trans = {ConvexSet({Dist::dirac(0), Dist::dirac(1)}), ConvexSet({Dist::dirac(1)})};
    a.outputs = {Weight(0), Weight(1)};
    a.validate();
    return a;
}

Rational value(const OutputValue& v) { return std::get<Weight>(v).value(); }

} // namespace

TEST_CASE("iterated transition") {
    auto a = fig3();
    CHECK(iterated_transition(a, {}) == unit_channel(a.monad, a.states));
    auto c1 = iterated_transition(a, an(1));
    CHECK(std::get<Dist>(c1.rows[0]) == D({{0, Rational(1, 2)}, {1, Rational(1, 2)}}));
    CHECK(std::get<Dist>(c1.rows[1]) == D({{1, 1}}));
    auto c2 = iterated_transition(a, an(2));
    CHECK(std::get<Dist>(c2.rows[0]) == D({{0, Rational(1, 4)}, {1, Rational(3, 4)}}));
    CHECK_THROWS_AS(iterated_transition(a, {1}), InputError);
}

TEST_CASE("words") {
    Carrier ab({"a", "bb"});
    CHECK(parse_word(ab, "eps").empty());
    CHECK(parse_word(ab, "a.bb.a") == Word{0, 1, 0});
    CHECK_THROWS_AS(parse_word(ab, "a.b"), InputError);
    CHECK(word_to_string(ab, {1, 0}) == "bb.a");
    CHECK(words_upto(2, 3).size() == 15);
}

TEST_CASE("fig3 language") {
    auto a = fig3();
    for (std::size_t n = 0; n <= 20; ++n) {
        CHECK(value(eval_word(a, an(n))) == Rational(1) - Rational::pow2_inv(static_cast<unsigned>(n)));
    }
    CHECK(eval_pfa_pathsum(a, an(2)) == Rational(3, 4));
    CHECK(eval_pfa_pathsum(a, {}) == Rational(0));
}

TEST_CASE("path sum over all state paths equals the forward semantics") {
    std::mt19937 rng(21);
    for (int t = 0; t < 40; ++t) {
        auto a = random_pfa(rng, 1 + t % 3, 1 + t % 2, 4, t % 2 == 0);
        for (const auto& w : words_upto(a.alphabet.size(), 5)) {
            CHECK(eval_pfa_pathsum(a, w) == value(eval_word(a, w)));
        }
    }
    CHECK_THROWS_AS(eval_pfa_pathsum(choice_npfa(), {}), InterfaceError);
}

TEST_CASE("one-state minplus counter") {
    auto mp = semiring_builtin("minplus");
    EffAutomaton a;
    a.monad = Monad::weighted(mp);
    a.kind = OutputKind::semiring;
    a.states = Carrier({"q"});
    a.alphabet = Carrier({"a"});
    a.init = unit(a.monad, 0);
    a.trans = {W(mp, {{0, 1}})};
    a.outputs = {Weight(0)};
    a.validate();
    for (std::size_t n = 0; n < 6; ++n) {
        CHECK(std::get<Weight>(eval_word(a, an(n))) == Weight(static_cast<long>(n)));
    }
}

TEST_CASE("npfa semantics") {
    auto a = choice_npfa();
    CHECK(value(eval_npfa(a, an(1), NpfaMode::max)) == Rational(1));
    CHECK(value(eval_npfa(a, an(1), NpfaMode::min)) == Rational(0));
    CHECK(std::get<Interval>(eval_npfa(a, an(1), NpfaMode::interval)) == Interval{0, 1});
    CHECK(value(npfa_bruteforce(a, an(1), NpfaMode::max)) == Rational(1));
    CHECK(value(eval_word(a, an(1))) == Rational(1));
}

TEST_CASE("npfa dynamic program equals brute force") {
    std::mt19937 rng(8);
    for (int t = 0; t < 30; ++t) {
        auto a = random_npfa(rng, 1 + t % 3, 1 + t % 2, 3, 4, t % 3 != 0);
        for (const auto& w : words_upto(a.alphabet.size(), 4)) {
            const auto iv = std::get<Interval>(eval_npfa(a, w, NpfaMode::interval));
            CHECK(iv == std::get<Interval>(npfa_bruteforce(a, w, NpfaMode::interval)));
            CHECK(iv.lo <= iv.hi);
            CHECK(value(eval_npfa(a, w, NpfaMode::max)) == iv.hi);
            CHECK(value(eval_npfa(a, w, NpfaMode::min)) == iv.lo);
            // the forward convex set gives the same optimum
            EffAutomaton ai = a;
            ai.kind = OutputKind::interval;
            CHECK(std::get<Interval>(output_sharp(ai, run(ai, w))) == iv);
            // both bounds are attained by some selection
            bool lo_hit = false, hi_hit = false;
            std::vector<Rational> o;
            for (const auto& v : a.outputs) {
                o.push_back(value(v));
            }
            for (const auto& d : npfa_selections(a, w)) {
                Rational e;
                for (const auto& [q, r] : d.weights()) {
                    e += r * o[q];
                }
                lo_hit = lo_hit || e == iv.lo;
                hi_hit = hi_hit || e == iv.hi;
            }
            CHECK(lo_hit);
            CHECK(hi_hit);
        }
    }
}

TEST_CASE("min never exceeds max") {
    std::mt19937 rng(9);
    for (int t = 0; t < 100; ++t) {
        auto a = random_npfa(rng, 1 + t % 3, 2, 3, 4);
        for (const auto& w : words_upto(2, 5)) {
            CHECK(value(eval_npfa(a, w, NpfaMode::min)) <= value(eval_npfa(a, w, NpfaMode::max)));
        }
    }
}

TEST_CASE("singleton-generator npfa behaves as a pfa") {
    std::mt19937 rng(10);
    for (int t = 0; t < 20; ++t) {
        auto p = random_pfa(rng, 3, 2, 4, false);
        EffAutomaton c = p;
        c.monad = Monad::convex();
        c.kind = OutputKind::max;
        c.init = ConvexSet({std::get<Dist>(p.init)});
        for (auto& e : c.trans) {
            e = ConvexSet({std::get<Dist>(e)});
        }
        c.validate();
        for (const auto& w : words_upto(2, 4)) {
            const Rational r = eval_pfa_pathsum(p, w);
            CHECK(value(eval_npfa(c, w, NpfaMode::max)) == r);
            CHECK(value(eval_npfa(c, w, NpfaMode::min)) == r);
            CHECK(std::get<Interval>(eval_npfa(c, w, NpfaMode::interval)) == Interval{r, r});
        }
    }
}

TEST_CASE("words evaluate through composed iterated transitions") {
    std::mt19937 rng(12);
    for (int t = 0; t < 10; ++t) {
        auto a = random_pfa(rng, 3, 2, 4, false);
        auto b = random_wfa(rng, semiring_builtin("rational"), 2, 2, false);
        for (const auto& u : words_upto(2, 3)) {
            for (const auto& v : words_upto(2, 2)) {
                Word uv = u;
                uv.insert(uv.end(), v.begin(), v.end());
                for (const auto* m : {&a, &b}) {
                    auto c = kleisli_compose(kleisli_compose(m->init_channel(), iterated_transition(*m, u)),
                                             iterated_transition(*m, v));
                    CHECK(output_sharp(*m, c.rows[0]) == eval_word(*m, uv));
                }
            }
        }
    }
}

TEST_CASE("purification preserves the language") {
    auto a = fig3();
    auto pa = purify_initial(a);
    CHECK(pa.states.size() == 3);
    CHECK(pa.has_pure_init());
    CHECK_FALSE(language_difference(a, pa, 8));

    auto b = a;
    b.init = D({{0, Rational(1, 2)}, {1, Rational(1, 2)}});
    auto pb = purify_initial(b);
    CHECK_FALSE(language_difference(b, pb, 8));
    CHECK(value(eval_word(pb, {})) == Rational(1, 2));

    std::mt19937 rng(13);
    for (int t = 0; t < 10; ++t) {
        for (const auto& s : {"boolean", "rational", "minplus", "maxplus"}) {
            auto w = random_wfa(rng, semiring_builtin(s), 2, 2, false);
            CHECK_FALSE(language_difference(w, purify_initial(w), 6));
        }
        for (auto kind : {OutputKind::max, OutputKind::min, OutputKind::interval}) {
            auto n = random_npfa(rng, 2, 2, 2, 4, false, kind);
            CHECK_FALSE(language_difference(n, purify_initial(n), 6));
        }
        auto p = random_pfa(rng, 3, 2, 4, false);
        CHECK_FALSE(language_difference(p, purify_initial(p), 8));
    }
}

TEST_CASE("isomorphism") {
    auto a = fig3();
    auto b = a;
    b.states = Carrier({"s", "t"});
    b.init = Dist::dirac(1);
    b.trans = {D({{0, 1}}), D({{1, Rational(1, 2)}, {0, Rational(1, 2)}})};
    b.outputs = {Weight(1), Weight(0)};
    auto iso = find_isomorphism(a, b);
    REQUIRE(iso.has_value());
    CHECK(*iso == std::vector<Index>{1, 0});
    b.outputs = {Weight(1), Weight(Rational(1, 2))};
    CHECK_FALSE(find_isomorphism(a, b).has_value());
}

TEST_CASE("validation") {
    auto a = fig3();
    a.outputs = {Weight(2), Weight(1)};
    CHECK_THROWS_AS(a.validate(), InterfaceError);
    a = fig3();
    a.kind = OutputKind::max;
    CHECK_THROWS_AS(a.validate(), InterfaceError);
    a = fig3();
    a.trans.pop_back();
    CHECK_THROWS_AS(a.validate(), InterfaceError);
}
