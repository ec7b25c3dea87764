#pragma once

#include "effa/effects.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace effa {

/// Closed interval [lo, hi] of acceptance probabilities.
struct Interval {
    Rational lo;
    Rational hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

using OutputValue = std::variant<Weight, Interval>;

std::string to_string(const OutputValue& v);

/// How outputs combine under the monad: probabilities in [0,1] for D, the
/// semiring itself for S, and for C the max, min, or [min,max] semantics.
enum class OutputKind { unit_interval, semiring, max, min, interval };

std::string to_string(OutputKind k);

using Word = std::vector<Index>;

struct EffAutomaton {
    Monad monad;
    Carrier states;
    Carrier alphabet;
    Effect init;
    /// delta(q, a) at q * |alphabet| + a
    std::vector<Effect> trans;
    std::vector<OutputValue> outputs;
    OutputKind kind = OutputKind::unit_interval;

    /// Throws InterfaceError when the pieces do not fit together.
    void validate() const;

    const Effect& delta(Index q, Index a) const { return trans.at(q * alphabet.size() + a); }
    Channel letter_channel(Index a) const;
    Channel init_channel() const;
    bool has_pure_init() const { return is_pure(init); }
};

/// Default output kind for a monad (max for convex).
OutputKind default_kind(const Monad& m);

/// Parses `a.b.c`, or `eps` for the empty word. Throws InputError.
Word parse_word(const Carrier& alphabet, const std::string& text);
std::string word_to_string(const Carrier& alphabet, const Word& w);
/// All words over n letters with length <= maxlen, shortlex.
std::vector<Word> words_upto(std::size_t letters, std::size_t maxlen);

Channel iterated_transition(const EffAutomaton& a, const Word& w);
/// i ; delta*(w) as an effect value over the states.
Effect run(const EffAutomaton& a, const Word& w);
/// o# of an effect value over the states.
OutputValue output_sharp(const EffAutomaton& a, const Effect& t);
OutputValue output_sharp(const Monad& monad, OutputKind kind, const std::vector<OutputValue>& outputs,
                         const Effect& t);

/// L(w). Convex automata are evaluated by the backward program of eval_npfa in the automaton's mode.
OutputValue eval_word(const EffAutomaton& a, const Word& w);

/// Explicit sum over all state paths; distribution automata only.
Rational eval_pfa_pathsum(const EffAutomaton& a, const Word& w);

enum class NpfaMode { max, min, interval };

/// Backward dynamic program over generators.
OutputValue eval_npfa(const EffAutomaton& a, const Word& w, NpfaMode mode);

/// Every distribution reachable by choosing, at each step and state, one
/// generator of the transition (and one of the initial set). Exponential.
std::vector<Dist> npfa_selections(const EffAutomaton& a, const Word& w);
/// Optimum over npfa_selections.
OutputValue npfa_bruteforce(const EffAutomaton& a, const Word& w, NpfaMode mode);

/// Adds a fresh state simulating the (possibly effectful) initial value and
/// makes it the pure initial state.
EffAutomaton purify_initial(const EffAutomaton& a);

/// A state bijection (indices of `b` per state of `a`) mapping one automaton
/// onto the other exactly, if one exists.
std::optional<std::vector<Index>> find_isomorphism(const EffAutomaton& a, const EffAutomaton& b);

/// First word of length <= maxlen on which the languages differ.
std::optional<Word> language_difference(const EffAutomaton& a, const EffAutomaton& b,
                                        std::size_t maxlen);

/// Relabels the support of an effect value along an injective index map.
Effect relabel(const Monad& m, const Effect& t, const std::vector<Index>& map);

} // namespace effa
