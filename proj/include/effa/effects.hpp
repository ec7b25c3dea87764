#pragma once

#include "effa/rational.hpp"
#include "effa/semiring.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace effa {

using Index = std::size_t;

/// Finite ordered set of named elements.
class Carrier {
public:
    Carrier() = default;
    explicit Carrier(std::vector<std::string> names);
    /// Carrier {0, ..., n-1} named by decimal digits.
    static Carrier range(std::size_t n);
    static Carrier singleton() { return Carrier({"*"}); }
    /// Pairs in row-major order: (x, y) has index x * |b| + y.
    static Carrier product(const Carrier& a, const Carrier& b);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Index i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    /// Throws InputError on unknown names.
    Index index(const std::string& name) const;
    std::optional<Index> find(const std::string& name) const;

    friend bool operator==(const Carrier& a, const Carrier& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, Index> lookup_;
};

/// All maps X -> Y (or partial maps X -/-> Y) in lexicographic order, the
/// image of the first element being the most significant digit. For partial
/// maps digit 0 stands for "undefined", so the nowhere-defined map is index 0.
class FunctionSpace {
public:
    static constexpr Index undefined = static_cast<Index>(-1);

    FunctionSpace(std::size_t nx, std::size_t ny, bool partial);

    std::size_t size() const { return size_; }
    std::size_t domain_size() const { return nx_; }
    std::size_t codomain_size() const { return ny_; }
    bool partial() const { return partial_; }

    /// Images f(0..nx-1), `undefined` where a partial map has no value.
    std::vector<Index> decode(Index f) const;
    Index encode(const std::vector<Index>& images) const;
    Index apply(Index f, Index x) const;

    Carrier carrier(const Carrier& x, const Carrier& y) const;

private:
    std::size_t nx_;
    std::size_t ny_;
    bool partial_;
    std::size_t base_;
    std::size_t size_;
};

using Support = std::map<Index, Rational>;

/// Finitely supported probability distribution: positive weights summing to 1.
class Dist {
public:
    Dist() = default;
    /// Validates and drops zero entries. Throws InputError.
    explicit Dist(Support weights);
    static Dist dirac(Index x);

    const Support& weights() const { return w_; }
    Rational operator[](Index x) const;
    std::size_t support_size() const { return w_.size(); }
    bool is_dirac() const { return w_.size() == 1; }

    friend bool operator==(const Dist& a, const Dist& b) { return a.w_ == b.w_; }
    friend bool operator<(const Dist& a, const Dist& b) { return a.w_ < b.w_; }

private:
    Support w_;
};

/// Finitely supported vector over a semiring, zero entries not stored.
class WeightedVec {
public:
    WeightedVec() = default;
    explicit WeightedVec(SemiringPtr s) : s_(std::move(s)) {}

    const SemiringPtr& semiring() const { return s_; }
    const std::map<Index, Weight>& weights() const { return w_; }
    Weight operator[](Index x) const;
    /// Accumulates `w` at `x` with the semiring addition.
    void add(Index x, const Weight& w);

    friend bool operator==(const WeightedVec& a, const WeightedVec& b);

private:
    SemiringPtr s_;
    std::map<Index, Weight> w_;
};

/// Non-empty finitely generated convex set of distributions, stored as its
/// sorted list of extreme points so that equal sets compare equal.
class ConvexSet {
public:
    ConvexSet() = default;
    /// Throws InputError on an empty generator list.
    explicit ConvexSet(std::vector<Dist> generators);

    const std::vector<Dist>& generators() const { return gens_; }

    friend bool operator==(const ConvexSet& a, const ConvexSet& b) { return a.gens_ == b.gens_; }

private:
    std::vector<Dist> gens_;
};

using Effect = std::variant<Dist, WeightedVec, ConvexSet>;

enum class MonadKind { dist, weighted, convex };

struct Monad {
    MonadKind kind = MonadKind::dist;
    SemiringPtr semiring; // weighted only

    static Monad dist() { return {MonadKind::dist, nullptr}; }
    static Monad weighted(SemiringPtr s) { return {MonadKind::weighted, std::move(s)}; }
    static Monad convex() { return {MonadKind::convex, nullptr}; }

    std::string name() const;
    friend bool operator==(const Monad& a, const Monad& b);
};

/// Kleisli morphism dom ~> cod: one effect value per domain element.
struct Channel {
    Monad monad;
    Carrier dom;
    Carrier cod;
    std::vector<Effect> rows;

    Channel() = default;
    /// Validates totality, monad tags and support indices. Throws InterfaceError.
    Channel(Monad m, Carrier d, Carrier c, std::vector<Effect> r);

    const Effect& operator()(Index x) const { return rows.at(x); }
    friend bool operator==(const Channel& a, const Channel& b) {
        return a.monad == b.monad && a.dom == b.dom && a.cod == b.cod && a.rows == b.rows;
    }
};

/// Throws InterfaceError if `e` is not a value of `m` over a carrier of size `n`.
void check_effect(const Monad& m, const Effect& e, std::size_t n);

Effect unit(const Monad& m, Index x);
bool is_pure(const Effect& e);
bool is_pure(const Channel& c);
/// The point of a pure effect value.
Index pure_point(const Effect& e);

/// T f for f given pointwise. Returning nullopt drops the mass, which is only
/// meaningful for the weighted monad (the zero vector).
Effect pushforward(const Monad& m, const Effect& t, const std::function<std::optional<Index>(Index)>& f);

/// Kleisli extension: the effect obtained by running `k` on the outcome of `t`.
Effect bind(const Monad& m, const Effect& t, const std::function<const Effect&(Index)>& k);

Channel unit_channel(const Monad& m, const Carrier& x);
Channel pure_channel(const Monad& m, const Carrier& dom, const Carrier& cod,
                     const std::function<Index(Index)>& f);
/// f ; g in diagrammatic order. Throws InterfaceError on mismatched carriers or monads.
Channel kleisli_compose(const Channel& f, const Channel& g);

enum class Side { left, right };

/// left: (x, t) -> T(y -> (x,y))(t); right: (t, y) -> T(x -> (x,y))(t).
/// `pure` is the paired element, `other_size` the size of the second factor.
Effect strength(Side side, const Monad& m, Index pure, const Effect& t, std::size_t second_size);

/// rs ; T ls ; mu over X x Y (|Y| = `ny`).
Effect double_strength(const Monad& m, const Effect& t1, const Effect& t2, std::size_t ny);
/// ls ; T rs ; mu, the other orientation; differs from the above for the convex monad.
Effect double_strength_swapped(const Monad& m, const Effect& t1, const Effect& t2, std::size_t ny);

Channel kleisli_pair(const Channel& f1, const Channel& f2);

/// xi(t)(x) = T(ev_x)(t) for t over the function space X -> Y (or X -/-> Y).
Channel xi(const Monad& m, const Effect& t, const FunctionSpace& fs, const Carrier& x,
           const Carrier& y);
/// lambda(g)(f) = prod_x g(x)(f(x)) over total functions.
Dist lambda(const Channel& g);

/// Exact convex-hull membership.
bool hull_membership(const Dist& d, const ConvexSet& s);
bool hull_membership(const Dist& d, const std::vector<Dist>& generators);
/// Drops every generator lying in the hull of the others.
ConvexSet convex_normalize(const std::vector<Dist>& generators);
/// Mutual hull containment of generators (representation-independent equality).
bool equivalent(const ConvexSet& a, const ConvexSet& b);

/// Extreme points of a finite set of non-negative vectors (not necessarily of
/// mass 1), sorted. Used for Minkowski sums of partial mixtures.
std::vector<Support> extreme_points(std::vector<Support> points);

struct CentralityViolation {
    std::size_t probe;
    Index x;
    Index x2;
    std::string describe() const;
};

/// Compares both sides of the centrality square for `f` against each probe, on every input pair.
std::vector<CentralityViolation> check_central(const Channel& f, const std::vector<Channel>& probes);

/// Whether projecting the double strength back onto both factors recovers the
/// inputs on a grid of values over carriers of size <= 3 (<= 2 for convex)
/// with weights of denominator <= 4.
bool check_affine(const Monad& m);

/// Marginal of an effect over X x Y onto the given factor.
Effect marginal(const Monad& m, const Effect& t, std::size_t ny, Side side);

std::string to_string(const Effect& e, const Carrier& c);
std::string to_string(const Channel& ch);

} // namespace effa
