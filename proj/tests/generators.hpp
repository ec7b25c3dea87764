#pragma once

#include "effa/automata.hpp"
#include "helpers.hpp"

#include <random>

namespace effa::testing {

inline EffAutomaton fig3() {
    EffAutomaton a;
    a.monad = Monad::dist();
    a.kind = OutputKind::unit_interval;
    a.states = Carrier({"q0", "q1"});
    a.alphabet = Carrier({"a"});
    a.init = Dist::dirac(0);
    a.trans = {D({{0, Rational(1, 2)}, {1, Rational(1, 2)}}), D({{1, 1}})};
    a.outputs = {Weight(0), Weight(1)};
    a.validate();
    return a;
}

inline Rational random_prob(std::mt19937& rng, long denom) {
    return Rational(std::uniform_int_distribution<long>(0, denom)(rng), denom);
}

inline EffAutomaton random_pfa(std::mt19937& rng, std::size_t nq, std::size_t ns, long denom,
                               bool pure_init = true) {
    EffAutomaton a;
    a.monad = Monad::dist();
    a.kind = OutputKind::unit_interval;
    a.states = Carrier::range(nq);
    std::vector<std::string> letters;
    for (std::size_t i = 0; i < ns; ++i) {
        letters.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    a.alphabet = Carrier(letters);
    if (pure_init) {
        a.init = Dist::dirac(std::uniform_int_distribution<std::size_t>(0, nq - 1)(rng));
    } else {
        a.init = random_dist(rng, nq, denom);
    }
    for (std::size_t k = 0; k < nq * ns; ++k) {
        a.trans.push_back(random_dist(rng, nq, denom));
    }
    for (std::size_t q = 0; q < nq; ++q) {
        a.outputs.emplace_back(Weight(random_prob(rng, denom)));
    }
    a.validate();
    return a;
}

inline ConvexSet random_convex(std::mt19937& rng, std::size_t n, std::size_t max_gens, long denom) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_gens)(rng);
    std::vector<Dist> gens;
    for (std::size_t i = 0; i < k; ++i) {
        gens.push_back(random_dist(rng, n, denom));
    }
    return ConvexSet(std::move(gens));
}

inline EffAutomaton random_npfa(std::mt19937& rng, std::size_t nq, std::size_t ns,
                                std::size_t max_gens, long denom, bool pure_init = true,
                                OutputKind kind = OutputKind::max) {
    EffAutomaton a;
    a.monad = Monad::convex();
    a.kind = kind;
    a.states = Carrier::range(nq);
    std::vector<std::string> letters;
    for (std::size_t i = 0; i < ns; ++i) {
        letters.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    a.alphabet = Carrier(letters);
    if (pure_init) {
        a.init = ConvexSet({Dist::dirac(std::uniform_int_distribution<std::size_t>(0, nq - 1)(rng))});
    } else {
        a.init = random_convex(rng, nq, max_gens, denom);
    }
    for (std::size_t k = 0; k < nq * ns; ++k) {
        a.trans.push_back(random_convex(rng, nq, max_gens, denom));
    }
    for (std::size_t q = 0; q < nq; ++q) {
        a.outputs.emplace_back(Weight(random_prob(rng, denom)));
    }
    a.validate();
    return a;
}

inline Weight random_weight(std::mt19937& rng, const Semiring& s) {
    std::uniform_int_distribution<int> u(0, 4);
    const int k = u(rng);
    if (s.name == "boolean") {
        return Weight(k % 2);
    }
    if (s.name == "rational") {
        // a third of the entries are zero
        if (k < 2) {
            return Weight(0);
        }
        return Weight(Rational(std::uniform_int_distribution<long>(-3, 4)(rng),
                               std::uniform_int_distribution<long>(1, 3)(rng)));
    }
    if (k == 0) {
        return s.zero;
    }
    return Weight(k - 1);
}

inline EffAutomaton random_wfa(std::mt19937& rng, const SemiringPtr& s, std::size_t nq,
                               std::size_t ns, bool pure_init = true) {
    EffAutomaton a;
    a.monad = Monad::weighted(s);
    a.kind = OutputKind::semiring;
    a.states = Carrier::range(nq);
    std::vector<std::string> letters;
    for (std::size_t i = 0; i < ns; ++i) {
        letters.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    a.alphabet = Carrier(letters);
    auto vec = [&]() {
        WeightedVec v(s);
        for (std::size_t q = 0; q < nq; ++q) {
            v.add(q, random_weight(rng, *s));
        }
        return v;
    };
    if (pure_init) {
        a.init = unit(a.monad, std::uniform_int_distribution<std::size_t>(0, nq - 1)(rng));
    } else {
        a.init = vec();
    }
    for (std::size_t k = 0; k < nq * ns; ++k) {
        a.trans.push_back(vec());
    }
    for (std::size_t q = 0; q < nq; ++q) {
        a.outputs.emplace_back(random_weight(rng, *s));
    }
    a.validate();
    return a;
}

/// Deterministic automaton as a distribution automaton with Dirac rows.
inline EffAutomaton dfa(std::size_t nq, const std::vector<std::string>& letters, Index start,
                        const std::vector<Index>& delta, const std::vector<int>& accept) {
    EffAutomaton a;
    a.monad = Monad::dist();
    a.kind = OutputKind::unit_interval;
    a.states = Carrier::range(nq);
    a.alphabet = Carrier(letters);
    a.init = Dist::dirac(start);
    for (Index t : delta) {
        a.trans.push_back(Dist::dirac(t));
    }
    for (int o : accept) {
        a.outputs.emplace_back(Weight(o));
    }
    a.validate();
    return a;
}

} // namespace effa::testing
