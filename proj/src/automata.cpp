#include "effa/automata.hpp"

#include "effa/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace effa {

std::string to_string(const OutputValue& v) {
    if (const auto* w = std::get_if<Weight>(&v)) {
        return w->str();
    }
    const auto& i = std::get<Interval>(v);
    return "[" + i.lo.str() + "," + i.hi.str() + "]";
}

std::string to_string(OutputKind k) {
    switch (k) {
    case OutputKind::unit_interval:
        return "unit";
    case OutputKind::semiring:
        return "semiring";
    case OutputKind::max:
        return "max";
    case OutputKind::min:
        return "min";
    case OutputKind::interval:
        return "interval";
    }
    return "?";
}

OutputKind default_kind(const Monad& m) {
    switch (m.kind) {
    case MonadKind::dist:
        return OutputKind::unit_interval;
    case MonadKind::weighted:
        return OutputKind::semiring;
    case MonadKind::convex:
        return OutputKind::max;
    }
    return OutputKind::unit_interval;
}

namespace {

bool in_unit(const Rational& r) { return r.sign() >= 0 && r <= Rational(1); }

const Rational& lower(const OutputValue& v) {
    if (const auto* w = std::get_if<Weight>(&v)) {
        return w->value();
    }
    return std::get<Interval>(v).lo;
}

const Rational& upper(const OutputValue& v) {
    if (const auto* w = std::get_if<Weight>(&v)) {
        return w->value();
    }
    return std::get<Interval>(v).hi;
}

Rational expectation(const Dist& d, const std::vector<Rational>& v) {
    Rational s;
    for (const auto& [q, w] : d.weights()) {
        s += w * v[q];
    }
    return s;
}

NpfaMode mode_of(OutputKind k) {
    switch (k) {
    case OutputKind::min:
        return NpfaMode::min;
    case OutputKind::interval:
        return NpfaMode::interval;
    default:
        return NpfaMode::max;
    }
}

} // namespace

void EffAutomaton::validate() const {
    const std::size_t n = states.size();
    if (trans.size() != n * alphabet.size()) {
        throw InterfaceError("transition table is not total on states x letters");
    }
    if (outputs.size() != n) {
        throw InterfaceError("output map is not total on states");
    }
    check_effect(monad, init, n);
    for (const auto& t : trans) {
        check_effect(monad, t, n);
    }
    const bool compatible =
        (monad.kind == MonadKind::dist && kind == OutputKind::unit_interval) ||
        (monad.kind == MonadKind::weighted && kind == OutputKind::semiring) ||
        (monad.kind == MonadKind::convex &&
         (kind == OutputKind::max || kind == OutputKind::min || kind == OutputKind::interval));
    if (!compatible) {
        throw InterfaceError("output kind '" + to_string(kind) + "' does not fit monad " + monad.name());
    }
    for (const auto& o : outputs) {
        if (const auto* iv = std::get_if<Interval>(&o)) {
            if (kind != OutputKind::interval || !in_unit(iv->lo) || !in_unit(iv->hi) || iv->hi < iv->lo) {
                throw InterfaceError("invalid interval output " + to_string(o));
            }
            continue;
        }
        const auto& w = std::get<Weight>(o);
        if (monad.kind == MonadKind::weighted) {
            if (!monad.semiring->contains(w)) {
                throw InterfaceError("output " + w.str() + " is not in the semiring");
            }
        } else if (!w.finite() || !in_unit(w.value())) {
            throw InterfaceError("output " + w.str() + " is not a probability");
        }
    }
}

Channel EffAutomaton::letter_channel(Index a) const {
    std::vector<Effect> rows;
    for (Index q = 0; q < states.size(); ++q) {
        rows.push_back(delta(q, a));
    }
    return Channel(monad, states, states, std::move(rows));
}

Channel EffAutomaton::init_channel() const {
    return Channel(monad, Carrier::singleton(), states, {init});
}

Word parse_word(const Carrier& alphabet, const std::string& text) {
    Word w;
    if (text == "eps" || text.empty()) {
        return w;
    }
    std::size_t start = 0;
    for (;;) {
        const std::size_t dot = text.find('.', start);
        const std::string letter = text.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        auto idx = alphabet.find(letter);
        if (!idx) {
            throw InputError("letter '" + letter + "' is not in the alphabet");
        }
        w.push_back(*idx);
        if (dot == std::string::npos) {
            break;
        }
        start = dot + 1;
    }
    return w;
}

std::string word_to_string(const Carrier& alphabet, const Word& w) {
    if (w.empty()) {
        return "eps";
    }
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += (i ? "." : "") + alphabet.name(w[i]);
    }
    return s;
}

std::vector<Word> words_upto(std::size_t letters, std::size_t maxlen) {
    std::vector<Word> out{Word{}};
    std::size_t level_start = 0;
    for (std::size_t len = 1; len <= maxlen && letters > 0; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_start; i < level_end; ++i) {
            for (Index a = 0; a < letters; ++a) {
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        }
        level_start = level_end;
    }
    return out;
}

namespace {

void check_word(const EffAutomaton& a, const Word& w) {
    for (Index x : w) {
        if (x >= a.alphabet.size()) {
            throw InputError("letter index outside the alphabet");
        }
    }
}

} // namespace

Channel iterated_transition(const EffAutomaton& a, const Word& w) {
    check_word(a, w);
    Channel c = unit_channel(a.monad, a.states);
    for (Index x : w) {
        c = kleisli_compose(c, a.letter_channel(x));
    }
    return c;
}

Effect run(const EffAutomaton& a, const Word& w) {
    check_word(a, w);
    Effect t = a.init;
    for (Index x : w) {
        t = effa::bind(a.monad, t, [&](Index q) -> const Effect& { return a.delta(q, x); });
    }
    return t;
}

OutputValue output_sharp(const Monad& monad, OutputKind kind, const std::vector<OutputValue>& outputs,
                         const Effect& t) {
    switch (monad.kind) {
    case MonadKind::dist: {
        Rational s;
        for (const auto& [q, w] : std::get<Dist>(t).weights()) {
            s += w * lower(outputs[q]);
        }
        return Weight(s);
    }
    case MonadKind::weighted: {
        const auto& sr = *monad.semiring;
        Weight s = sr.zero;
        for (const auto& [q, w] : std::get<WeightedVec>(t).weights()) {
            s = sr.plus(s, sr.times(w, std::get<Weight>(outputs[q])));
        }
        return s;
    }
    case MonadKind::convex: {
        std::vector<Rational> lo, hi;
        for (const auto& o : outputs) {
            lo.push_back(lower(o));
            hi.push_back(upper(o));
        }
        const auto& gens = std::get<ConvexSet>(t).generators();
        Rational mn = expectation(gens.front(), lo);
        Rational mx = expectation(gens.front(), hi);
        for (const auto& g : gens) {
            mn = min(mn, expectation(g, lo));
            mx = max(mx, expectation(g, hi));
        }
        switch (kind) {
        case OutputKind::min:
            return Weight(mn);
        case OutputKind::interval:
            return Interval{mn, mx};
        default:
            return Weight(mx);
        }
    }
    }
    throw InterfaceError("unknown monad");
}

OutputValue output_sharp(const EffAutomaton& a, const Effect& t) {
    return output_sharp(a.monad, a.kind, a.outputs, t);
}

OutputValue eval_word(const EffAutomaton& a, const Word& w) {
    if (a.monad.kind == MonadKind::convex) {
        return eval_npfa(a, w, mode_of(a.kind));
    }
    return output_sharp(a, run(a, w));
}

Rational eval_pfa_pathsum(const EffAutomaton& a, const Word& w) {
    if (a.monad.kind != MonadKind::dist) {
        throw InterfaceError("path sums are defined for distribution automata");
    }
    check_word(a, w);
    const std::size_t n = a.states.size();
    Rational total;
    // path q_0 ... q_k, weight i(q_0) * prod delta(q_{j-1}, w_j)(q_j), times o(q_|w|)
    std::function<void(std::size_t, Index, const Rational&)> go = [&](std::size_t k, Index q,
                                                                        const Rational& p) {
        if (p.is_zero()) {
            return;
        }
        if (k == w.size()) {
            total += p * lower(a.outputs[q]);
            return;
        }
        const auto& d = std::get<Dist>(a.delta(q, w[k]));
        for (Index r = 0; r < n; ++r) {
            go(k + 1, r, p * d[r]);
        }
    };
    const auto& i = std::get<Dist>(a.init);
    for (Index q = 0; q < n; ++q) {
        go(0, q, i[q]);
    }
    return total;
}

OutputValue eval_npfa(const EffAutomaton& a, const Word& w, NpfaMode mode) {
    if (a.monad.kind != MonadKind::convex) {
        throw InterfaceError("NPFA semantics need the convex monad");
    }
    check_word(a, w);
    const std::size_t n = a.states.size();
    std::vector<Rational> lo(n), hi(n);
    for (Index q = 0; q < n; ++q) {
        lo[q] = lower(a.outputs[q]);
        hi[q] = upper(a.outputs[q]);
    }
    auto step = [](const ConvexSet& s, const std::vector<Rational>& v, bool maximize) {
        Rational best = expectation(s.generators().front(), v);
        for (const auto& g : s.generators()) {
            Rational e = expectation(g, v);
            if (maximize ? best < e : e < best) {
                best = std::move(e);
            }
        }
        return best;
    };
    for (std::size_t k = w.size(); k-- > 0;) {
        std::vector<Rational> nlo(n), nhi(n);
        for (Index q = 0; q < n; ++q) {
            const auto& s = std::get<ConvexSet>(a.delta(q, w[k]));
            if (mode != NpfaMode::max) {
                nlo[q] = step(s, lo, false);
            }
            if (mode != NpfaMode::min) {
                nhi[q] = step(s, hi, true);
            }
        }
        lo = std::move(nlo);
        hi = std::move(nhi);
    }
    const auto& i = std::get<ConvexSet>(a.init);
    switch (mode) {
    case NpfaMode::max:
        return Weight(step(i, hi, true));
    case NpfaMode::min:
        return Weight(step(i, lo, false));
    case NpfaMode::interval:
        return Interval{step(i, lo, false), step(i, hi, true)};
    }
    throw InterfaceError("unknown mode");
}

std::vector<Dist> npfa_selections(const EffAutomaton& a, const Word& w) {
    if (a.monad.kind != MonadKind::convex) {
        throw InterfaceError("NPFA semantics need the convex monad");
    }
    check_word(a, w);
    const auto& init = std::get<ConvexSet>(a.init).generators();
    std::set<Dist> cur(init.begin(), init.end());
    for (Index x : w) {
        std::set<Dist> next;
        for (const auto& d : cur) {
            // one generator per state in the support
            std::vector<std::pair<Index, Rational>> sup(d.weights().begin(), d.weights().end());
            std::function<void(std::size_t, Support&)> go = [&](std::size_t k, Support& acc) {
                if (k == sup.size()) {
                    next.emplace(acc);
                    return;
                }
                const auto& [q, r] = sup[k];
                for (const auto& g : std::get<ConvexSet>(a.delta(q, x)).generators()) {
                    Support nacc = acc;
                    for (const auto& [p, s] : g.weights()) {
                        nacc[p] += r * s;
                    }
                    go(k + 1, nacc);
                }
            };
            Support empty;
            go(0, empty);
        }
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

OutputValue npfa_bruteforce(const EffAutomaton& a, const Word& w, NpfaMode mode) {
    const auto sel = npfa_selections(a, w);
    std::vector<Rational> lo, hi;
    for (const auto& o : a.outputs) {
        lo.push_back(lower(o));
        hi.push_back(upper(o));
    }
    Rational mn = expectation(sel.front(), lo), mx = expectation(sel.front(), hi);
    for (const auto& d : sel) {
        mn = min(mn, expectation(d, lo));
        mx = max(mx, expectation(d, hi));
    }
    switch (mode) {
    case NpfaMode::max:
        return Weight(mx);
    case NpfaMode::min:
        return Weight(mn);
    case NpfaMode::interval:
        return Interval{mn, mx};
    }
    throw InterfaceError("unknown mode");
}

EffAutomaton purify_initial(const EffAutomaton& a) {
    a.validate();
    EffAutomaton b;
    b.monad = a.monad;
    b.kind = a.kind;
    b.alphabet = a.alphabet;
    std::string fresh = "_init";
    while (a.states.find(fresh)) {
        fresh += "'";
    }
    auto names = a.states.names();
    names.push_back(fresh);
    b.states = Carrier(std::move(names));
    const Index bot = a.states.size();
    b.init = unit(a.monad, bot);
    b.trans = a.trans;
    for (Index x = 0; x < a.alphabet.size(); ++x) {
        b.trans.push_back(effa::bind(a.monad, a.init, [&](Index q) -> const Effect& { return a.delta(q, x); }));
    }
    b.outputs = a.outputs;
    // the fresh state outputs L(eps) of the original
    b.outputs.push_back(output_sharp(a, a.init));
    b.validate();
    return b;
}

Effect relabel(const Monad& m, const Effect& t, const std::vector<Index>& map) {
    return pushforward(m, t, [&](Index q) { return std::optional<Index>(map.at(q)); });
}

std::optional<std::vector<Index>> find_isomorphism(const EffAutomaton& a, const EffAutomaton& b) {
    if (!(a.monad == b.monad) || a.kind != b.kind || a.states.size() != b.states.size() ||
        !(a.alphabet == b.alphabet)) {
        return std::nullopt;
    }
    const std::size_t n = a.states.size();
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index{0});
    do {
        bool ok = relabel(a.monad, a.init, perm) == b.init;
        for (Index q = 0; ok && q < n; ++q) {
            ok = a.outputs[q] == b.outputs[perm[q]];
            for (Index x = 0; ok && x < a.alphabet.size(); ++x) {
                ok = relabel(a.monad, a.delta(q, x), perm) == b.delta(perm[q], x);
            }
        }
        if (ok) {
            return perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::optional<Word> language_difference(const EffAutomaton& a, const EffAutomaton& b,
                                        std::size_t maxlen) {
    if (!(a.alphabet == b.alphabet)) {
        throw InterfaceError("automata have different alphabets");
    }
    for (const auto& w : words_upto(a.alphabet.size(), maxlen)) {
        if (!(eval_word(a, w) == eval_word(b, w))) {
            return w;
        }
    }
    return std::nullopt;
}

} // namespace effa
