#pragma once

#include "effa/automata.hpp"
#include "effa/effects.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace effa {

/// Default bound on |X| for the monoids of (partial) self-maps of X.
inline constexpr std::size_t function_monoid_bound = 6;

/// Finite monoid on indexed elements. Small monoids carry an explicit table;
/// function monoids compose analytically.
class FinMonoid {
public:
    FinMonoid() = default;
    /// Row-major table: table[a * n + b] = a . b. Throws IntegrityError unless
    /// the table is associative with the given unit.
    FinMonoid(Carrier elements, std::vector<Index> table, Index unit);
    /// Same, without checking the laws (for testing broken data).
    static FinMonoid unchecked(Carrier elements, std::vector<Index> table, Index unit);

    /// All total (or partial) self-maps of X under diagrammatic composition,
    /// (f . g)(x) = g(f(x)). Throws ResourceError when |X| > bound.
    static FinMonoid functions(const Carrier& x, bool partial,
                               std::size_t bound = function_monoid_bound);

    std::size_t size() const { return elements_.size(); }
    const Carrier& elements() const { return elements_; }
    Index unit() const { return unit_; }
    Index mul(Index a, Index b) const;
    /// Present for function monoids.
    const std::optional<FunctionSpace>& function_space() const { return fs_; }

    /// Violated laws on all triples (empty for a lawful table).
    std::vector<std::string> law_violations() const;

private:
    Carrier elements_;
    std::vector<Index> table_;
    Index unit_ = 0;
    std::optional<FunctionSpace> fs_;
};

using MonoidPtr = std::shared_ptr<const FinMonoid>;

/// pi ; T(.) on TM.
Effect tm_multiply(const FinMonoid& m, const Monad& monad, const Effect& t1, const Effect& t2);

/// Letter-indexed effectful map into a finite monoid (its generating data h0).
struct EffMorphism {
    MonoidPtr target;
    Monad monad;
    Carrier alphabet;
    std::vector<Effect> letters;

    /// Throws InterfaceError if a letter image is not an effect value over M.
    void validate() const;
};

/// h(eps) = unit, h(a1...an) = h0(a1) . ... . h0(an) folded left in TM.
Effect free_extension_word(const EffMorphism& h, const Word& w);
/// Explicit sum over factorizations, distributions only. Exponential in |w|.
Dist free_extension_sum(const EffMorphism& h, const Word& w);

struct MorphismViolation {
    Word u;
    Word v;
    std::string describe(const Carrier& alphabet) const;
};

/// Pairs (u, v), |u| + |v| <= maxlen, where h(uv) != h(u) . h(v); the pair
/// (eps, eps) stands for h(eps) != unit.
std::vector<MorphismViolation> verify_effectful_morphism(const EffMorphism& h, std::size_t maxlen);

struct Submonoid {
    bool overflow = false;
    /// The submonoid with its own indices (absent on overflow).
    std::optional<FinMonoid> monoid;
    /// members[i] is the ambient index of element i.
    std::vector<Index> members;
};

/// Submonoid generated by `generators`; reports overflow past `bound` elements.
Submonoid transition_monoid_closure(const FinMonoid& ambient, const std::vector<Index>& generators,
                                    std::size_t bound);

/// Syntactic monoid of a language recognized by a deterministic automaton.
struct SyntacticMonoid {
    FinMonoid monoid;
    /// h_L on letters
    std::vector<Index> letter_image;
    /// p_L: whether the element accepts
    std::vector<bool> accepting;
    std::size_t minimal_states = 0;

    Index image(const Word& w) const;
    bool accepts(const Word& w) const { return accepting[image(w)]; }
};

/// Minimizes the deterministic automaton by partition refinement and returns
/// the transition monoid of the result. Elements are named by shortest words.
/// Throws PreconditionError for non-deterministic data, ResourceError past `bound`.
SyntacticMonoid classical_syntactic_monoid(const EffAutomaton& dfa, std::size_t bound = 4096);

} // namespace effa
