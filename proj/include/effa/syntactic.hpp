#pragma once

#include "effa/automata.hpp"
#include "effa/matrix.hpp"

#include <map>
#include <vector>

namespace effa {

/// value(w) = initial . letters(w1) ... letters(wn) . final
struct LinearRep {
    std::size_t n = 0;
    RVec initial;
    std::vector<Matrix> letters;
    RVec final;

    Matrix word_matrix(const Word& w) const;
    Rational value(const Word& w) const;
};

/// Finite convex combination of words: positive weights summing to 1.
using FormalCombo = std::map<Word, Rational>;

/// Throws InputError unless the weights are positive and sum to 1.
void validate_combo(const FormalCombo& c);
FormalCombo combo_dirac(const Word& w);

/// Distribution or rational-weighted automata only (InterfaceError otherwise).
LinearRep to_linear(const EffAutomaton& a);

/// Forward reduction to the reachable row space, then backward reduction to
/// the observable column space. Bases are grown in shortlex word order.
LinearRep minimize(const LinearRep& rep);
bool is_minimal(const LinearRep& rep);

/// sum of weight * letters(word). Throws InputError on a foreign letter.
Matrix combo_matrix(const LinearRep& rep, const FormalCombo& c);
/// Equality of combo matrices. Throws PreconditionError unless `rep` is minimal.
bool syn_congruent(const LinearRep& rep, const FormalCombo& c1, const FormalCombo& c2);
/// Compares sum r_i L(x v_i y) on all contexts |x|, |y| <= maxctx by evaluating `a`.
bool bounded_context_oracle(const EffAutomaton& a, const FormalCombo& c1, const FormalCombo& c2,
                            std::size_t maxctx);
Rational syn_eval(const LinearRep& rep, const FormalCombo& c);

/// Pairwise commutation of the letter matrices. Throws PreconditionError unless minimal.
bool is_commutative(const LinearRep& rep);

struct CancellativityCertificate {
    std::size_t dimension = 0;
    std::vector<Matrix> letters;

    /// Whether r x + (1-r) y = r x + (1-r) z forces y = z for these matrices.
    bool cancels(const Matrix& x, const Matrix& y, const Matrix& z, const Rational& r) const;
};

/// Throws PreconditionError unless minimal.
CancellativityCertificate cancellativity_embedding(const LinearRep& rep);

} // namespace effa
