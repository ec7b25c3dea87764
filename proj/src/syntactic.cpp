#include "effa/syntactic.hpp"

#include "effa/error.hpp"

namespace effa {

Matrix LinearRep::word_matrix(const Word& w) const {
    Matrix m = Matrix::identity(n);
    for (Index x : w) {
        if (x >= letters.size()) {
            throw InputError("letter index outside the alphabet");
        }
        m = m * letters[x];
    }
    return m;
}

Rational LinearRep::value(const Word& w) const {
    RVec v = initial;
    for (Index x : w) {
        if (x >= letters.size()) {
            throw InputError("letter index outside the alphabet");
        }
        v = v * letters[x];
    }
    return dot(v, final);
}

void validate_combo(const FormalCombo& c) {
    Rational total;
    for (const auto& [w, r] : c) {
        if (r.sign() <= 0) {
            throw InputError("combination weights must be positive");
        }
        total += r;
    }
    if (total != Rational(1)) {
        throw InputError("combination weights sum to " + total.str() + ", not 1");
    }
}

FormalCombo combo_dirac(const Word& w) { return {{w, Rational(1)}}; }

LinearRep to_linear(const EffAutomaton& a) {
    a.validate();
    const bool rational =
        a.monad.kind == MonadKind::weighted && a.monad.semiring->name == "rational";
    if (a.monad.kind != MonadKind::dist && !rational) {
        throw InterfaceError("linear representations need distributions or rational weights, not " +
                             a.monad.name());
    }
    const std::size_t n = a.states.size();
    auto row = [&](const Effect& e) {
        RVec v(n);
        if (const auto* d = std::get_if<Dist>(&e)) {
            for (const auto& [q, p] : d->weights()) {
                v[q] = p;
            }
        } else {
            for (const auto& [q, w] : std::get<WeightedVec>(e).weights()) {
                v[q] = w.value();
            }
        }
        return v;
    };
    LinearRep rep;
    rep.n = n;
    rep.initial = row(a.init);
    for (Index x = 0; x < a.alphabet.size(); ++x) {
        Matrix m(n, n);
        for (Index q = 0; q < n; ++q) {
            const RVec r = row(a.delta(q, x));
            for (Index q2 = 0; q2 < n; ++q2) {
                m(q, q2) = r[q2];
            }
        }
        rep.letters.push_back(std::move(m));
    }
    for (const auto& o : a.outputs) {
        rep.final.push_back(std::get<Weight>(o).value());
    }
    return rep;
}

namespace {

bool is_zero(const RVec& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

// Restricts to the span of initial . M_w. Each basis vector b_i satisfies
// b_i M_x = sum_j N_x[i][j] b_j, and initial = b_0. A representation that is
// already reachable comes back unchanged.
LinearRep forward(const LinearRep& rep) {
    RowBasis basis(rep.n);
    LinearRep out;
    out.letters.assign(rep.letters.size(), Matrix());
    if (is_zero(rep.initial)) {
        for (auto& m : out.letters) {
            m = Matrix(0, 0);
        }
        return out;
    }
    basis.add(rep.initial);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const RVec v = basis.originals()[i];
        for (const auto& m : rep.letters) {
            basis.add(v * m);
        }
    }
    const std::size_t k = basis.size();
    if (k == rep.n) {
        // already reachable: keep the given coordinates
        return rep;
    }
    out.n = k;
    out.initial.assign(k, Rational());
    out.initial[0] = Rational(1);
    for (std::size_t x = 0; x < rep.letters.size(); ++x) {
        Matrix nx(k, k);
        for (std::size_t i = 0; i < k; ++i) {
            const auto c = basis.coordinates(basis.originals()[i] * rep.letters[x]);
            for (std::size_t j = 0; j < k; ++j) {
                nx(i, j) = (*c)[j];
            }
        }
        out.letters[x] = std::move(nx);
    }
    for (std::size_t i = 0; i < k; ++i) {
        out.final.push_back(dot(basis.originals()[i], rep.final));
    }
    return out;
}

LinearRep transposed(const LinearRep& rep) {
    LinearRep t;
    t.n = rep.n;
    t.initial = rep.final;
    t.final = rep.initial;
    for (const auto& m : rep.letters) {
        t.letters.push_back(m.transpose());
    }
    return t;
}

} // namespace

LinearRep minimize(const LinearRep& rep) {
    // backward reduction is the forward one on the transposed representation
    return transposed(forward(transposed(forward(rep))));
}

bool is_minimal(const LinearRep& rep) { return minimize(rep).n == rep.n; }

Matrix combo_matrix(const LinearRep& rep, const FormalCombo& c) {
    validate_combo(c);
    Matrix out(rep.n, rep.n);
    for (const auto& [w, r] : c) {
        out = out + r * rep.word_matrix(w);
    }
    return out;
}

bool syn_congruent(const LinearRep& rep, const FormalCombo& c1, const FormalCombo& c2) {
    if (!is_minimal(rep)) {
        throw PreconditionError("syntactic congruence is decided on a minimal representation");
    }
    return combo_matrix(rep, c1) == combo_matrix(rep, c2);
}

namespace {

Rational scalar(const OutputValue& v) {
    const auto* w = std::get_if<Weight>(&v);
    if (!w || !w->finite()) {
        throw InterfaceError("the context oracle needs rational-valued languages");
    }
    return w->value();
}

} // namespace

bool bounded_context_oracle(const EffAutomaton& a, const FormalCombo& c1, const FormalCombo& c2,
                            std::size_t maxctx) {
    validate_combo(c1);
    validate_combo(c2);
    const auto ctx = words_upto(a.alphabet.size(), maxctx);
    auto side = [&](const FormalCombo& c, const Word& x, const Word& y) {
        Rational s;
        for (const auto& [v, r] : c) {
            Word w = x;
            w.insert(w.end(), v.begin(), v.end());
            w.insert(w.end(), y.begin(), y.end());
            s += r * scalar(eval_word(a, w));
        }
        return s;
    };
    for (const auto& x : ctx) {
        for (const auto& y : ctx) {
            if (side(c1, x, y) != side(c2, x, y)) {
                return false;
            }
        }
    }
    return true;
}

Rational syn_eval(const LinearRep& rep, const FormalCombo& c) {
    return dot(rep.initial * combo_matrix(rep, c), rep.final);
}

bool is_commutative(const LinearRep& rep) {
    if (!is_minimal(rep)) {
        throw PreconditionError("commutativity is decided on a minimal representation");
    }
    for (std::size_t i = 0; i < rep.letters.size(); ++i) {
        for (std::size_t j = i + 1; j < rep.letters.size(); ++j) {
            if (!(rep.letters[i] * rep.letters[j] == rep.letters[j] * rep.letters[i])) {
                return false;
            }
        }
    }
    return true;
}

bool CancellativityCertificate::cancels(const Matrix& x, const Matrix& y, const Matrix& z,
                                        const Rational& r) const {
    const Rational s = Rational(1) - r;
    return !(r * x + s * y == r * x + s * z) || y == z;
}

CancellativityCertificate cancellativity_embedding(const LinearRep& rep) {
    if (!is_minimal(rep)) {
        throw PreconditionError("the embedding is read off a minimal representation");
    }
    return {rep.n, rep.letters};
}

} // namespace effa
