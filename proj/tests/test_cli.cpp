#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "effa/cli.hpp"
#include "effa/error.hpp"
#include "generators.hpp"

#include <cstdio>
#include <fstream>

using namespace effa;
using namespace effa::testing;

namespace {

const std::string data = EFFA_DATA_DIR;

std::string tmpfile(const std::string& name, const std::string& text) {
    const std::string path = "cli_test_" + name;
    std::ofstream(path) << text;
    return path;
}

CommandResult run(std::vector<std::string> args) { return run_command(args); }

std::size_t error_line(const std::string& text) {
    try {
        parse_automaton(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

const std::string header = "monad dist\nalphabet a\nstates q0 q1\n";

} // namespace

TEST_CASE("automaton files") {
    const auto a = parse_automaton(
        "# comment\n" + header + "init q0:1\ntrans q0 a -> q0:1/2 q1:1/2  # half\ntrans q1 a -> q1:1\noutput q0:0 q1:1\n");
    CHECK(find_isomorphism(a, fig3()));
    CHECK(print_automaton(a) == print_automaton(fig3()));
    CHECK(print_automaton(parse_automaton(print_automaton(a))) == print_automaton(a));

    CHECK(error_line(header + "init q0:1/2\n") == 4);
    CHECK(error_line(header + "init q0:1\ntrans q0 b -> q0:1\n") == 5);
    CHECK(error_line(header + "init q0:1\ntrans q0 a -> q2:1\n") == 5);
    CHECK(error_line(header + "init q0:3/2 q1:-1/2\n") == 4);
    CHECK(error_line(header + "init q0:1\nbogus\n") == 5);
    CHECK(error_line("monad dist\nalphabet a\nstates q0 q0\n") == 3);
    CHECK(error_line(header + "init q0:1\ntrans q0 a -> q0:1\noutput q0:0 q1:1\n") > 0);
    CHECK(error_line("monad weighted nosuch\n") == 1);
    CHECK(error_line(header + "semantics max\n") == 4);
}

TEST_CASE("convex and weighted files") {
    const auto c = parse_automaton("monad convex\nsemantics min\nalphabet a\nstates q0 q1\ninit q0:1\n"
                                   "trans q0 a -> q0:1 | q1:1\ntrans q1 a -> q1:1\noutput q0:0 q1:1\n");
    CHECK(c.kind == OutputKind::min);
    CHECK(std::get<ConvexSet>(c.delta(0, 0)).generators().size() == 2);
    CHECK(print_automaton(parse_automaton(print_automaton(c))) == print_automaton(c));
    CHECK(print_automaton(c).find("q0:1 | q1:1") != std::string::npos);

    const auto w = parse_automaton("monad weighted minplus\nalphabet a\nstates s t\ninit s:0\n"
                                   "trans s a -> t:2\ntrans t a ->\noutput t:0 s:inf\n");
    CHECK(eval_word(w, parse_word(w.alphabet, "a")) == OutputValue(Weight(2)));
    CHECK(eval_word(w, parse_word(w.alphabet, "a.a")) == OutputValue(w.monad.semiring->zero));
    CHECK(print_automaton(parse_automaton(print_automaton(w))) == print_automaton(w));

    std::mt19937 rng(11);
    for (const char* s : {"boolean", "rational", "minplus", "maxplus"}) {
        for (int k = 0; k < 5; ++k) {
            const auto a = random_wfa(rng, semiring_builtin(s), 3, 2, k % 2 == 0);
            const auto b = parse_automaton(print_automaton(a));
            CHECK(print_automaton(b) == print_automaton(a));
            CHECK(!language_difference(a, b, 4));
        }
    }
    for (auto kind : {OutputKind::max, OutputKind::min, OutputKind::interval}) {
        const auto a = random_npfa(rng, 3, 2, 3, 4, false, kind);
        const auto b = parse_automaton(print_automaton(a));
        CHECK(b.kind == kind);
        CHECK(!language_difference(a, b, 3));
    }
}

TEST_CASE("recognizer and bialgebra files") {
    const auto r = automaton_to_recognizer(fig3());
    const auto r2 = parse_recognizer(print_recognizer(r));
    CHECK(print_recognizer(r2) == print_recognizer(r));
    CHECK(verify_recognition(fig3(), r2, 6).empty());

    const auto b = automaton_to_bialgebra(fig3());
    const auto b2 = parse_bialgebra(print_bialgebra(b));
    CHECK(print_bialgebra(b2) == print_bialgebra(b));
    CHECK(verify_recognition(fig3(), b2, 6).empty());

    // x*x=e is not associative with the rest of this table
    CHECK_THROWS_AS(parse_recognizer("monad dist\nalphabet a\nmonoid e x\nunit e\n"
                                     "table e*e=e\ntable e*x=x\ntable x*e=e\ntable x*x=e\n"
                                     "hom a -> x:1\npred e:0 x:1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_recognizer("monad dist\nalphabet a\nmonoid e\nunit e\npred e:0\nhom a -> e:1\n"),
                    ParseError);
}

TEST_CASE("word combinations") {
    const Carrier s({"a", "b"});
    const auto c = parse_combo(s, "1/3*eps + 2/3*a.b");
    CHECK(c.size() == 2);
    CHECK(c.at(Word{}) == Rational(1, 3));
    CHECK(c.at(Word{0, 1}) == Rational(2, 3));
    CHECK_THROWS_AS(parse_combo(s, "1/2*a"), InputError);
    CHECK_THROWS_AS(parse_combo(s, "1*c"), InputError);
}

TEST_CASE("commands") {
    const std::string fig3f = data + "/fig3.aut";
    auto e = run({"eval", fig3f, "a.a.a", "eps"});
    CHECK(e.status == 0);
    CHECK(e.out == "7/8\n0\n");
    CHECK(run({"--decimal", "3", "eval", fig3f, "a"}).out == "0.500\n");

    auto s = run({"syncong", fig3f, "1/3*eps + 2/3*a.a", "1*a"});
    CHECK(s.status == 0);
    CHECK(s.out == "true\n");
    CHECK(run({"syncong", fig3f, "1*eps", "1*a"}).status == 1);
    CHECK(run({"commutative", fig3f}).status == 0);

    const auto rec = run({"to-monoid", fig3f});
    REQUIRE(rec.status == 0);
    const auto recf = tmpfile("w.rec", rec.out);
    CHECK(run({"verify", fig3f, recf}).status == 0);
    const auto back = run({"from-monoid", data + "/fig3.rec"});
    REQUIRE(back.status == 0);
    const auto rt = tmpfile("rt.aut", back.out);
    CHECK(run({"equiv", fig3f, rt, "--max-len", "8"}).status == 0);
    CHECK(run({"verify", fig3f, data + "/fig3.rec", "--max-len", "8"}).status == 0);

    const auto bia = run({"to-bialgebra", fig3f});
    REQUIRE(bia.status == 0);
    const auto biaf = tmpfile("b.bia", bia.out);
    CHECK(run({"verify", fig3f, biaf}).status == 0);
    const auto fb = run({"from-bialgebra", biaf});
    REQUIRE(fb.status == 0);
    CHECK(run({"equiv", fig3f, tmpfile("fb.aut", fb.out)}).status == 0);

    // a wrong predicate is reported, not thrown
    const auto bad = tmpfile("bad.rec", std::string(rec.out).replace(rec.out.rfind(":1"), 2, ":0"));
    const auto v = run({"verify", fig3f, bad, "--max-len", "3"});
    CHECK(v.status == 1);
    CHECK(v.out.find("automaton") != std::string::npos);

    const auto even = run({"equiv", data + "/even-a.aut", fig3f});
    CHECK(even.status == 2);
    const auto m = run({"minimize", fig3f});
    CHECK(m.out.rfind("dimension 2\n", 0) == 0);

    const auto g = run({"game", "1/3*0 + 2/3*2"});
    CHECK(g.status == 0);
    CHECK(g.out == "merge 0 1/3\nfinal 1*1\n");

    CHECK(run({"eval", fig3f, "b"}).status == 2);
    CHECK(run({"eval", data + "/missing.aut", "a"}).status == 2);
    CHECK(run({"game", "1/2*0"}).status == 2);
    CHECK(run({"nosuch"}).status == 2);
    const auto pe = run({"eval", tmpfile("pe.aut", header + "init q0:1/2\n"), "a"});
    CHECK(pe.status == 2);
    CHECK(pe.err.find("line 4") != std::string::npos);

    for (const char* f : {"w.rec", "rt.aut", "b.bia", "fb.aut", "bad.rec", "pe.aut"}) {
        std::remove((std::string("cli_test_") + f).c_str());
    }
}

TEST_CASE("reports are deterministic") {
    const std::string f = data + "/npfa.aut";
    CHECK(run({"to-monoid", f}).out == run({"to-monoid", f}).out);
    CHECK(run({"game", "1/2*0 + 1/2*3"}).out == run({"game", "1/2*0 + 1/2*3"}).out);
}
