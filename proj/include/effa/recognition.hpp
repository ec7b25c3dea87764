#pragma once

#include "effa/automata.hpp"
#include "effa/monoids.hpp"

#include <string>
#include <vector>

namespace effa {

/// A finite monoid M with a monoid map xi0: M -> (Q ~> Q) whose free
/// extension xi: TM -> (Q ~> Q) is onto.
struct Witness {
    Monad monad;
    Carrier states;
    MonoidPtr monoid;

    Channel xi0(Index m) const;
    Channel xi(const Effect& t) const;
    /// (m, q) -> xi0(m)(q) as one channel M x Q ~> Q.
    Channel uncurried() const;
};

/// Total maps for D and C, partial maps for S.
Witness witness_xi0(const Monad& monad, const Carrier& states, std::size_t bound = function_monoid_bound);

inline constexpr std::size_t convex_preimage_states = 4;
inline constexpr std::size_t convex_preimage_generators = 4;

/// Some t with xi(t) = target. Throws ResourceError past the convex caps.
Effect xi_preimage(const Witness& w, const Channel& target);

struct EffRecognizer {
    EffMorphism morphism;
    /// p(m) per element of M
    std::vector<OutputValue> predicate;
    OutputKind kind = OutputKind::unit_interval;

    void validate() const;
};

/// (h ; p#)(w). Convex sets are evaluated by a backward program over M.
OutputValue recognizer_value(const EffRecognizer& r, const Word& w);

/// Non-pure initial values are purified first.
EffRecognizer automaton_to_recognizer(const EffAutomaton& a, std::size_t bound = function_monoid_bound);
EffAutomaton recognizer_to_automaton(const EffRecognizer& r);

/// Recognition through channels Q ~> Q: s(g) = gen_images[g], the letters act
/// by h0, and p(f) = (i ; f ; o#).
struct BialgRecognizer {
    Monad monad;
    Carrier states;
    Carrier generators;
    std::vector<Channel> gen_images;
    Carrier alphabet;
    std::vector<Channel> letters;
    Effect init;
    std::vector<OutputValue> outputs;
    OutputKind kind = OutputKind::unit_interval;

    void validate() const;
    /// s extended to effect values over G.
    Channel s(const Effect& t) const;
    OutputValue p(const Channel& f) const;
};

OutputValue bialgebra_value(const BialgRecognizer& r, const Word& w);

BialgRecognizer automaton_to_bialgebra(const EffAutomaton& a, std::size_t bound = function_monoid_bound);
/// Right regular representation of a finite-monoid recognizer (G = M).
BialgRecognizer recognizer_to_bialgebra(const EffRecognizer& r);
/// Distributions and rational weights only (CapabilityError otherwise).
/// IntegrityError if some required preimage does not exist.
EffAutomaton bialgebra_to_automaton(const BialgRecognizer& r);

struct RecognitionViolation {
    Word word;
    OutputValue automaton;
    OutputValue recognizer;
    std::string describe(const Carrier& alphabet) const;
};

std::vector<RecognitionViolation> verify_recognition(const EffAutomaton& a, const EffRecognizer& r,
                                                     std::size_t maxlen);
std::vector<RecognitionViolation> verify_recognition(const EffAutomaton& a, const BialgRecognizer& r,
                                                     std::size_t maxlen);

} // namespace effa
