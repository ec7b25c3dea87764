#include "effa/recognition.hpp"

#include "effa/error.hpp"
#include "effa/lp.hpp"
#include "effa/matrix.hpp"

#include <map>

namespace effa {

namespace {

Rational lower(const OutputValue& v) {
    if (const auto* w = std::get_if<Weight>(&v)) {
        return w->value();
    }
    return std::get<Interval>(v).lo;
}

Rational upper(const OutputValue& v) {
    if (const auto* w = std::get_if<Weight>(&v)) {
        return w->value();
    }
    return std::get<Interval>(v).hi;
}

Effect zero_of(const Monad& m) { return WeightedVec(m.semiring); }

const FunctionSpace& space_of(const Witness& w) {
    if (!w.monoid || !w.monoid->function_space()) {
        throw InterfaceError("witness monoid is not a function monoid");
    }
    return *w.monoid->function_space();
}

} // namespace

Channel Witness::xi0(Index m) const {
    const auto images = space_of(*this).decode(m);
    std::vector<Effect> rows;
    for (Index v : images) {
        rows.push_back(v == FunctionSpace::undefined ? zero_of(monad) : unit(monad, v));
    }
    return Channel(monad, states, states, std::move(rows));
}

Channel Witness::xi(const Effect& t) const { return effa::xi(monad, t, space_of(*this), states, states); }

Channel Witness::uncurried() const {
    const auto& fs = space_of(*this);
    std::vector<Effect> rows;
    for (Index m = 0; m < monoid->size(); ++m) {
        for (Index q = 0; q < states.size(); ++q) {
            const Index v = fs.apply(m, q);
            rows.push_back(v == FunctionSpace::undefined ? zero_of(monad) : unit(monad, v));
        }
    }
    return Channel(monad, Carrier::product(monoid->elements(), states), states, std::move(rows));
}

Witness witness_xi0(const Monad& monad, const Carrier& states, std::size_t bound) {
    const bool partial = monad.kind == MonadKind::weighted;
    return {monad, states, std::make_shared<const FinMonoid>(FinMonoid::functions(states, partial, bound))};
}

Effect xi_preimage(const Witness& w, const Channel& target) {
    if (!(target.monad == w.monad) || !(target.dom == w.states) || !(target.cod == w.states)) {
        throw InterfaceError("channel does not live on the witness carrier");
    }
    const auto& fs = space_of(w);
    const std::size_t n = w.states.size();
    switch (w.monad.kind) {
    case MonadKind::dist:
        return lambda(target);
    case MonadKind::weighted: {
        // one singleton partial map q -> q' per non-zero entry
        WeightedVec out(w.monad.semiring);
        std::vector<Index> img(n, FunctionSpace::undefined);
        for (Index q = 0; q < n; ++q) {
            for (const auto& [q2, wt] : std::get<WeightedVec>(target.rows[q]).weights()) {
                img[q] = q2;
                out.add(fs.encode(img), wt);
            }
            img[q] = FunctionSpace::undefined;
        }
        return out;
    }
    case MonadKind::convex: {
        if (n > convex_preimage_states) {
            throw ResourceError("convex preimage is capped at " + std::to_string(convex_preimage_states) +
                                " states");
        }
        for (const auto& row : target.rows) {
            if (std::get<ConvexSet>(row).generators().size() > convex_preimage_generators) {
                throw ResourceError("convex preimage is capped at " +
                                    std::to_string(convex_preimage_generators) + " generators per state");
            }
        }
        std::vector<Dist> gens;
        std::vector<Effect> pick(n);
        std::function<void(Index)> go = [&](Index q) {
            if (q == n) {
                gens.push_back(lambda(Channel(Monad::dist(), w.states, w.states, pick)));
                return;
            }
            for (const auto& d : std::get<ConvexSet>(target.rows[q]).generators()) {
                pick[q] = d;
                go(q + 1);
            }
        };
        go(0);
        return ConvexSet(std::move(gens));
    }
    }
    throw InterfaceError("unknown monad");
}

void EffRecognizer::validate() const {
    morphism.validate();
    if (predicate.size() != morphism.target->size()) {
        throw InterfaceError("predicate must give a value for every monoid element");
    }
    recognizer_to_automaton(*this);
}

OutputValue recognizer_value(const EffRecognizer& r, const Word& w) {
    const auto& h = r.morphism;
    if (h.monad.kind != MonadKind::convex) {
        return output_sharp(h.monad, r.kind, r.predicate, free_extension_word(h, w));
    }
    // max (min) of a linear functional over U . V is attained pointwise, so
    // the value of h(w) is a backward program along w
    const auto& m = *h.target;
    const std::size_t n = m.size();
    std::vector<Rational> lo(n), hi(n);
    for (Index x = 0; x < n; ++x) {
        lo[x] = lower(r.predicate[x]);
        hi[x] = upper(r.predicate[x]);
    }
    for (std::size_t k = w.size(); k-- > 0;) {
        if (w[k] >= h.letters.size()) {
            throw InputError("letter index outside the alphabet");
        }
        const auto& gens = std::get<ConvexSet>(h.letters[w[k]]).generators();
        std::vector<Rational> nlo(n), nhi(n);
        for (Index x = 0; x < n; ++x) {
            bool first = true;
            for (const auto& d : gens) {
                Rational a, b;
                for (const auto& [y, p] : d.weights()) {
                    const Index xy = m.mul(x, y);
                    a += p * lo[xy];
                    b += p * hi[xy];
                }
                if (first || a < nlo[x]) {
                    nlo[x] = a;
                }
                if (first || nhi[x] < b) {
                    nhi[x] = b;
                }
                first = false;
            }
        }
        lo = std::move(nlo);
        hi = std::move(nhi);
    }
    const Index e = m.unit();
    switch (r.kind) {
    case OutputKind::min:
        return Weight(lo[e]);
    case OutputKind::interval:
        return Interval{lo[e], hi[e]};
    default:
        return Weight(hi[e]);
    }
}

EffRecognizer automaton_to_recognizer(const EffAutomaton& a, std::size_t bound) {
    a.validate();
    const EffAutomaton b = a.has_pure_init() ? a : purify_initial(a);
    const Witness wit = witness_xi0(b.monad, b.states, bound);
    EffRecognizer r;
    r.kind = b.kind;
    r.morphism.target = wit.monoid;
    r.morphism.monad = b.monad;
    r.morphism.alphabet = b.alphabet;
    for (Index x = 0; x < b.alphabet.size(); ++x) {
        r.morphism.letters.push_back(xi_preimage(wit, b.letter_channel(x)));
    }
    const Index q0 = pure_point(b.init);
    for (Index m = 0; m < wit.monoid->size(); ++m) {
        r.predicate.push_back(output_sharp(b, wit.xi0(m)(q0)));
    }
    return r;
}

EffAutomaton recognizer_to_automaton(const EffRecognizer& r) {
    const auto& h = r.morphism;
    h.validate();
    const auto& m = *h.target;
    EffAutomaton a;
    a.monad = h.monad;
    a.kind = r.kind;
    a.states = m.elements();
    a.alphabet = h.alphabet;
    a.init = unit(h.monad, m.unit());
    for (Index x = 0; x < m.size(); ++x) {
        for (Index l = 0; l < h.alphabet.size(); ++l) {
            a.trans.push_back(pushforward(h.monad, h.letters[l],
                                          [&](Index y) { return std::optional<Index>(m.mul(x, y)); }));
        }
    }
    a.outputs = r.predicate;
    a.validate();
    return a;
}

// ---- bialgebras ------------------------------------------------------------

void BialgRecognizer::validate() const {
    if (gen_images.size() != generators.size()) {
        throw InterfaceError("every generator needs an image");
    }
    if (letters.size() != alphabet.size()) {
        throw InterfaceError("every letter needs an image");
    }
    auto fits = [&](const Channel& c) {
        if (!(c.monad == monad) || !(c.dom == states) || !(c.cod == states)) {
            throw InterfaceError("represented elements must be channels on the state carrier");
        }
    };
    for (const auto& c : gen_images) {
        fits(c);
    }
    for (const auto& c : letters) {
        fits(c);
    }
    // init, outputs and kind are checked as an automaton would be
    EffAutomaton a;
    a.monad = monad;
    a.kind = kind;
    a.states = states;
    a.alphabet = alphabet;
    a.init = init;
    for (Index q = 0; q < states.size(); ++q) {
        for (const auto& c : letters) {
            a.trans.push_back(c(q));
        }
    }
    a.outputs = outputs;
    a.validate();
}

Channel BialgRecognizer::s(const Effect& t) const {
    check_effect(monad, t, generators.size());
    std::vector<Effect> rows;
    for (Index q = 0; q < states.size(); ++q) {
        rows.push_back(effa::bind(monad, t, [&](Index g) -> const Effect& { return gen_images[g](q); }));
    }
    return Channel(monad, states, states, std::move(rows));
}

OutputValue BialgRecognizer::p(const Channel& f) const {
    return output_sharp(monad, kind, outputs, effa::bind(monad, init, [&](Index q) -> const Effect& { return f(q); }));
}

OutputValue bialgebra_value(const BialgRecognizer& r, const Word& w) {
    Channel f = unit_channel(r.monad, r.states);
    for (Index x : w) {
        f = kleisli_compose(f, r.letters.at(x));
    }
    return r.p(f);
}

BialgRecognizer automaton_to_bialgebra(const EffAutomaton& a, std::size_t bound) {
    a.validate();
    const EffAutomaton b = a.has_pure_init() ? a : purify_initial(a);
    const Witness wit = witness_xi0(b.monad, b.states, bound);
    BialgRecognizer r;
    r.monad = b.monad;
    r.states = b.states;
    r.generators = wit.monoid->elements();
    for (Index m = 0; m < wit.monoid->size(); ++m) {
        r.gen_images.push_back(wit.xi0(m));
    }
    r.alphabet = b.alphabet;
    for (Index x = 0; x < b.alphabet.size(); ++x) {
        r.letters.push_back(b.letter_channel(x));
    }
    r.init = b.init;
    r.outputs = b.outputs;
    r.kind = b.kind;
    return r;
}

BialgRecognizer recognizer_to_bialgebra(const EffRecognizer& r) {
    const auto& h = r.morphism;
    h.validate();
    const auto& m = *h.target;
    BialgRecognizer b;
    b.monad = h.monad;
    b.states = m.elements();
    b.generators = m.elements();
    for (Index g = 0; g < m.size(); ++g) {
        b.gen_images.push_back(pure_channel(h.monad, b.states, b.states, [&](Index x) { return m.mul(x, g); }));
    }
    b.alphabet = h.alphabet;
    for (const auto& t : h.letters) {
        std::vector<Effect> rows;
        for (Index x = 0; x < m.size(); ++x) {
            rows.push_back(pushforward(h.monad, t, [&](Index y) { return std::optional<Index>(m.mul(x, y)); }));
        }
        b.letters.emplace_back(h.monad, b.states, b.states, std::move(rows));
    }
    b.init = unit(h.monad, m.unit());
    b.outputs = r.predicate;
    b.kind = r.kind;
    return b;
}

namespace {

RVec flatten(const Channel& c) {
    const std::size_t n = c.cod.size();
    RVec v(c.dom.size() * n);
    for (Index q = 0; q < c.dom.size(); ++q) {
        if (const auto* d = std::get_if<Dist>(&c.rows[q])) {
            for (const auto& [y, p] : d->weights()) {
                v[q * n + y] = p;
            }
        } else {
            for (const auto& [y, w] : std::get<WeightedVec>(c.rows[q]).weights()) {
                v[q * n + y] = w.value();
            }
        }
    }
    return v;
}

} // namespace

EffAutomaton bialgebra_to_automaton(const BialgRecognizer& r) {
    r.validate();
    const bool dist = r.monad.kind == MonadKind::dist;
    if (!dist && !(r.monad.kind == MonadKind::weighted && r.monad.semiring->name == "rational")) {
        throw CapabilityError("preimages under s are only solved for distributions and rational weights");
    }
    const std::size_t ng = r.generators.size();
    std::vector<RVec> points;
    for (const auto& c : r.gen_images) {
        points.push_back(flatten(c));
    }
    Matrix a(points.empty() ? 0 : points.front().size(), ng);
    for (Index g = 0; g < ng; ++g) {
        for (std::size_t i = 0; i < points[g].size(); ++i) {
            a(i, g) = points[g][i];
        }
    }
    auto preimage = [&](const Channel& target) -> Effect {
        const RVec b = flatten(target);
        const auto c = dist ? convex_coefficients(points, b) : solve_linear(a, b);
        if (!c) {
            throw IntegrityError("no generator combination represents " + to_string(target));
        }
        if (dist) {
            Support s;
            for (Index g = 0; g < ng; ++g) {
                if (!(*c)[g].is_zero()) {
                    s.emplace(g, (*c)[g]);
                }
            }
            return Dist(std::move(s));
        }
        WeightedVec v(r.monad.semiring);
        for (Index g = 0; g < ng; ++g) {
            v.add(g, (*c)[g]);
        }
        return v;
    };
    EffAutomaton out;
    out.monad = r.monad;
    out.kind = r.kind;
    out.states = r.generators;
    out.alphabet = r.alphabet;
    out.init = preimage(unit_channel(r.monad, r.states));
    for (Index g = 0; g < ng; ++g) {
        for (Index x = 0; x < r.alphabet.size(); ++x) {
            out.trans.push_back(preimage(kleisli_compose(r.gen_images[g], r.letters[x])));
        }
        out.outputs.push_back(r.p(r.gen_images[g]));
    }
    out.validate();
    return out;
}

std::string RecognitionViolation::describe(const Carrier& alphabet) const {
    return word_to_string(alphabet, word) + ": automaton " + to_string(automaton) + ", recognizer " +
           to_string(recognizer);
}

std::vector<RecognitionViolation> verify_recognition(const EffAutomaton& a, const EffRecognizer& r,
                                                     std::size_t maxlen) {
    if (!(a.alphabet == r.morphism.alphabet)) {
        throw InterfaceError("alphabets differ");
    }
    std::vector<RecognitionViolation> out;
    const auto& h = r.morphism;
    std::map<Word, Effect> images;
    for (const auto& w : words_upto(a.alphabet.size(), maxlen)) {
        OutputValue rv;
        if (h.monad.kind == MonadKind::convex) {
            rv = recognizer_value(r, w);
        } else {
            // h(wx) = h(w) . h0(x), reusing the shorter prefix
            Effect t = w.empty() ? unit(h.monad, h.target->unit())
                                 : tm_multiply(*h.target, h.monad, images.at(Word(w.begin(), w.end() - 1)),
                                               h.letters.at(w.back()));
            rv = output_sharp(h.monad, r.kind, r.predicate, t);
            images.emplace(w, std::move(t));
        }
        OutputValue av = eval_word(a, w);
        if (!(av == rv)) {
            out.push_back({w, std::move(av), std::move(rv)});
        }
    }
    return out;
}

std::vector<RecognitionViolation> verify_recognition(const EffAutomaton& a, const BialgRecognizer& r,
                                                     std::size_t maxlen) {
    if (!(a.alphabet == r.alphabet)) {
        throw InterfaceError("alphabets differ");
    }
    std::vector<RecognitionViolation> out;
    std::map<Word, Channel> images;
    for (const auto& w : words_upto(a.alphabet.size(), maxlen)) {
        Channel f = w.empty() ? unit_channel(r.monad, r.states)
                              : kleisli_compose(images.at(Word(w.begin(), w.end() - 1)), r.letters.at(w.back()));
        OutputValue rv = r.p(f);
        images.emplace(w, std::move(f));
        OutputValue av = eval_word(a, w);
        if (!(av == rv)) {
            out.push_back({w, std::move(av), std::move(rv)});
        }
    }
    return out;
}

} // namespace effa
