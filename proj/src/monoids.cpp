#include "effa/monoids.hpp"

#include "effa/error.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace effa {

FinMonoid FinMonoid::unchecked(Carrier elements, std::vector<Index> table, Index unit) {
    const std::size_t n = elements.size();
    if (table.size() != n * n) {
        throw InputError("multiplication table must have |M|^2 entries");
    }
    for (Index v : table) {
        if (v >= n) {
            throw InputError("multiplication table entry outside the monoid");
        }
    }
    if (unit >= n) {
        throw InputError("unit outside the monoid");
    }
    FinMonoid m;
    m.elements_ = std::move(elements);
    m.table_ = std::move(table);
    m.unit_ = unit;
    return m;
}

FinMonoid::FinMonoid(Carrier elements, std::vector<Index> table, Index unit) {
    *this = unchecked(std::move(elements), std::move(table), unit);
    auto bad = law_violations();
    if (!bad.empty()) {
        throw IntegrityError("not a monoid: " + bad.front());
    }
}

FinMonoid FinMonoid::functions(const Carrier& x, bool partial, std::size_t bound) {
    if (x.size() > bound) {
        throw ResourceError("function monoid on " + std::to_string(x.size()) +
                            " points exceeds the bound " + std::to_string(bound));
    }
    FinMonoid m;
    m.fs_.emplace(x.size(), x.size(), partial);
    m.elements_ = m.fs_->carrier(x, x);
    std::vector<Index> id(x.size());
    for (Index i = 0; i < x.size(); ++i) {
        id[i] = i;
    }
    m.unit_ = m.fs_->encode(id);
    return m;
}

Index FinMonoid::mul(Index a, Index b) const {
    if (fs_) {
        const auto fa = fs_->decode(a);
        const auto fb = fs_->decode(b);
        std::vector<Index> out(fa.size());
        for (std::size_t i = 0; i < fa.size(); ++i) {
            out[i] = fa[i] == FunctionSpace::undefined ? FunctionSpace::undefined : fb[fa[i]];
        }
        return fs_->encode(out);
    }
    return table_[a * size() + b];
}

std::vector<std::string> FinMonoid::law_violations() const {
    std::vector<std::string> out;
    const std::size_t n = size();
    const auto& nm = elements_;
    for (Index a = 0; a < n; ++a) {
        if (mul(unit_, a) != a) {
            out.push_back("left unit fails at " + nm.name(a));
        }
        if (mul(a, unit_) != a) {
            out.push_back("right unit fails at " + nm.name(a));
        }
        for (Index b = 0; b < n; ++b) {
            const Index ab = mul(a, b);
            for (Index c = 0; c < n; ++c) {
                if (mul(ab, c) != mul(a, mul(b, c))) {
                    out.push_back("associativity fails at (" + nm.name(a) + "," + nm.name(b) + "," +
                                  nm.name(c) + ")");
                }
            }
        }
    }
    return out;
}

Effect tm_multiply(const FinMonoid& m, const Monad& monad, const Effect& t1, const Effect& t2) {
    // pi ; T(.) = t1 >>= (x -> T(x . -)(t2)) by naturality of the strengths,
    // which keeps convex sets in M instead of M x M
    std::map<Index, Effect> left;
    auto k = [&](Index x) -> const Effect& {
        auto it = left.find(x);
        if (it == left.end()) {
            it = left.emplace(x, pushforward(monad, t2, [&](Index y) { return std::optional<Index>(m.mul(x, y)); }))
                     .first;
        }
        return it->second;
    };
    return effa::bind(monad, t1, k);
}

void EffMorphism::validate() const {
    if (!target) {
        throw InterfaceError("morphism has no target monoid");
    }
    if (letters.size() != alphabet.size()) {
        throw InterfaceError("morphism must give an image for every letter");
    }
    for (const auto& e : letters) {
        check_effect(monad, e, target->size());
    }
}

Effect free_extension_word(const EffMorphism& h, const Word& w) {
    if (w.empty()) {
        return unit(h.monad, h.target->unit());
    }
    for (Index x : w) {
        if (x >= h.letters.size()) {
            throw InputError("letter index outside the alphabet");
        }
    }
    Effect t = h.letters[w.front()];
    for (std::size_t i = 1; i < w.size(); ++i) {
        t = tm_multiply(*h.target, h.monad, t, h.letters[w[i]]);
    }
    return t;
}

Dist free_extension_sum(const EffMorphism& h, const Word& w) {
    if (h.monad.kind != MonadKind::dist) {
        throw InterfaceError("the factorization sum is defined for distributions");
    }
    const auto& m = *h.target;
    Support out;
    std::function<void(std::size_t, Index, const Rational&)> go = [&](std::size_t k, Index acc,
                                                                        const Rational& p) {
        if (k == w.size()) {
            out[acc] += p;
            return;
        }
        for (const auto& [mi, r] : std::get<Dist>(h.letters.at(w[k])).weights()) {
            go(k + 1, m.mul(acc, mi), p * r);
        }
    };
    go(0, m.unit(), Rational(1));
    return Dist(std::move(out));
}

std::string MorphismViolation::describe(const Carrier& alphabet) const {
    return "h(" + word_to_string(alphabet, u) + " " + word_to_string(alphabet, v) + ") != h(" +
           word_to_string(alphabet, u) + ") . h(" + word_to_string(alphabet, v) + ")";
}

std::vector<MorphismViolation> verify_effectful_morphism(const EffMorphism& h, std::size_t maxlen) {
    h.validate();
    std::map<Word, Effect> memo;
    auto image = [&](const Word& w) -> const Effect& {
        auto it = memo.find(w);
        if (it == memo.end()) {
            it = memo.emplace(w, free_extension_word(h, w)).first;
        }
        return it->second;
    };
    std::vector<MorphismViolation> out;
    if (!(image({}) == unit(h.monad, h.target->unit()))) {
        out.push_back({{}, {}});
    }
    const auto words = words_upto(h.alphabet.size(), maxlen);
    for (const auto& u : words) {
        for (const auto& v : words) {
            if (u.size() + v.size() > maxlen) {
                continue;
            }
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            if (!(image(uv) == tm_multiply(*h.target, h.monad, image(u), image(v)))) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

Submonoid transition_monoid_closure(const FinMonoid& ambient, const std::vector<Index>& generators,
                                    std::size_t bound) {
    Submonoid s;
    std::map<Index, Index> local;
    std::deque<Index> queue;
    auto visit = [&](Index a) {
        if (local.emplace(a, s.members.size()).second) {
            s.members.push_back(a);
            queue.push_back(a);
        }
    };
    visit(ambient.unit());
    while (!queue.empty()) {
        const Index a = queue.front();
        queue.pop_front();
        for (Index g : generators) {
            visit(ambient.mul(a, g));
            if (s.members.size() > bound) {
                s.overflow = true;
                return s;
            }
        }
    }
    const std::size_t n = s.members.size();
    std::vector<Index> table(n * n);
    std::vector<std::string> names;
    for (Index i = 0; i < n; ++i) {
        names.push_back(ambient.elements().name(s.members[i]));
        for (Index j = 0; j < n; ++j) {
            table[i * n + j] = local.at(ambient.mul(s.members[i], s.members[j]));
        }
    }
    s.monoid = FinMonoid::unchecked(Carrier(std::move(names)), std::move(table), 0);
    return s;
}

Index SyntacticMonoid::image(const Word& w) const {
    Index m = monoid.unit();
    for (Index x : w) {
        m = monoid.mul(m, letter_image.at(x));
    }
    return m;
}

SyntacticMonoid classical_syntactic_monoid(const EffAutomaton& dfa, std::size_t bound) {
    dfa.validate();
    if (!is_pure(dfa.init) ||
        !std::all_of(dfa.trans.begin(), dfa.trans.end(), [](const Effect& e) { return is_pure(e); })) {
        throw PreconditionError("automaton is not deterministic");
    }
    const std::size_t nq = dfa.states.size();
    const std::size_t ns = dfa.alphabet.size();
    std::vector<int> accept(nq);
    for (Index q = 0; q < nq; ++q) {
        const auto& w = std::get<Weight>(dfa.outputs[q]);
        if (!w.finite() || (w.value() != Rational(0) && w.value() != Rational(1))) {
            throw PreconditionError("outputs of a deterministic automaton must be 0 or 1");
        }
        accept[q] = w.value().is_zero() ? 0 : 1;
    }
    std::vector<Index> next(nq * ns);
    for (Index q = 0; q < nq; ++q) {
        for (Index x = 0; x < ns; ++x) {
            next[q * ns + x] = pure_point(dfa.delta(q, x));
        }
    }

    // reachable part
    std::vector<bool> seen(nq, false);
    std::vector<Index> order;
    const Index start = pure_point(dfa.init);
    std::deque<Index> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
        const Index q = queue.front();
        queue.pop_front();
        order.push_back(q);
        for (Index x = 0; x < ns; ++x) {
            const Index r = next[q * ns + x];
            if (!seen[r]) {
                seen[r] = true;
                queue.push_back(r);
            }
        }
    }

    // Moore refinement: split by output, then by successor classes until stable
    std::vector<Index> cls(nq, 0);
    for (Index q : order) {
        cls[q] = static_cast<Index>(accept[q]);
    }
    std::size_t classes = 0;
    for (;;) {
        std::map<std::vector<Index>, Index> sig;
        std::vector<Index> ncls(nq, 0);
        for (Index q : order) {
            std::vector<Index> key{cls[q]};
            for (Index x = 0; x < ns; ++x) {
                key.push_back(cls[next[q * ns + x]]);
            }
            ncls[q] = sig.emplace(std::move(key), sig.size()).first->second;
        }
        cls = std::move(ncls);
        if (sig.size() == classes) {
            break;
        }
        classes = sig.size();
    }

    // letters as maps on classes, composed left to right
    using Fn = std::vector<Index>;
    std::vector<Fn> letter_fn(ns, Fn(classes));
    std::vector<int> class_accept(classes);
    for (Index q : order) {
        class_accept[cls[q]] = accept[q];
        for (Index x = 0; x < ns; ++x) {
            letter_fn[x][cls[q]] = cls[next[q * ns + x]];
        }
    }
    auto then = [](const Fn& f, const Fn& g) {
        Fn h(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            h[i] = g[f[i]];
        }
        return h;
    };
    Fn id(classes);
    for (Index i = 0; i < classes; ++i) {
        id[i] = i;
    }
    std::map<Fn, Index> index;
    std::vector<Fn> elems;
    std::vector<std::string> names;
    std::vector<Word> reps;
    index.emplace(id, 0);
    elems.push_back(id);
    reps.push_back({});
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (Index x = 0; x < ns; ++x) {
            Fn f = then(elems[i], letter_fn[x]);
            if (index.emplace(f, elems.size()).second) {
                if (elems.size() >= bound) {
                    throw ResourceError("syntactic monoid exceeds " + std::to_string(bound) + " elements");
                }
                elems.push_back(std::move(f));
                Word w = reps[i];
                w.push_back(x);
                reps.push_back(std::move(w));
            }
        }
    }
    const std::size_t n = elems.size();
    std::vector<Index> table(n * n);
    for (Index i = 0; i < n; ++i) {
        names.push_back(word_to_string(dfa.alphabet, reps[i]));
        for (Index j = 0; j < n; ++j) {
            table[i * n + j] = index.at(then(elems[i], elems[j]));
        }
    }
    SyntacticMonoid s;
    s.monoid = FinMonoid(Carrier(std::move(names)), std::move(table), 0);
    s.minimal_states = classes;
    for (Index x = 0; x < ns; ++x) {
        s.letter_image.push_back(index.at(letter_fn[x]));
    }
    const Index c0 = cls[start];
    for (const auto& f : elems) {
        s.accepting.push_back(class_accept[f[c0]] != 0);
    }
    return s;
}

} // namespace effa
