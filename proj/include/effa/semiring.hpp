#pragma once

#include "effa/rational.hpp"

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace effa {

/// A semiring element: a rational, or one of the two absorbing infinities
/// used by the tropical semirings.
class Weight {
public:
    enum class Inf : signed char { none = 0, pos = 1, neg = -1 };

    Weight() = default;
    Weight(Rational v) : value_(std::move(v)) {} // NOLINT(google-explicit-constructor)
    Weight(long v) : value_(v) {}                // NOLINT(google-explicit-constructor)

    static Weight pos_inf() { return Weight(Inf::pos); }
    static Weight neg_inf() { return Weight(Inf::neg); }

    bool finite() const { return inf_ == Inf::none; }
    Inf infinity() const { return inf_; }
    /// Finite value; zero for the infinities.
    const Rational& value() const { return value_; }

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.inf_ == b.inf_ && (a.inf_ != Inf::none || a.value_ == b.value_);
    }
    /// Total order with -inf < finite < inf.
    friend bool operator<(const Weight& a, const Weight& b);

    std::string str() const;

private:
    explicit Weight(Inf i) : inf_(i) {}
    Rational value_;
    Inf inf_ = Inf::none;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// A semiring (S, +, 0, ., 1) given by its operations. Builtins use
/// structural equality; user-supplied descriptors may pass their own.
struct Semiring {
    using BinOp = std::function<Weight(const Weight&, const Weight&)>;
    using Eq = std::function<bool(const Weight&, const Weight&)>;

    std::string name;
    Weight zero;
    Weight one;
    BinOp add;
    BinOp mul;
    Eq equal = [](const Weight& a, const Weight& b) { return a == b; };
    bool add_idempotent = false;
    bool mul_commutative = false;

    Weight plus(const Weight& a, const Weight& b) const { return add(a, b); }
    Weight times(const Weight& a, const Weight& b) const { return mul(a, b); }
    bool eq(const Weight& a, const Weight& b) const { return equal(a, b); }
    bool is_zero(const Weight& a) const { return equal(a, zero); }

    /// Parses an element literal; rejects values outside the carrier
    /// (e.g. negative or fractional weights for the tropical semirings).
    Weight parse(std::string_view text) const;

    /// Whether `w` lies in the builtin carrier. User descriptors accept everything.
    bool contains(const Weight& w) const;
};

using SemiringPtr = std::shared_ptr<const Semiring>;

/// One of `boolean`, `rational`, `minplus`, `maxplus`. Throws ConfigError otherwise.
SemiringPtr semiring_builtin(std::string_view name);

bool same_semiring(const SemiringPtr& a, const SemiringPtr& b);

/// One failed law instance.
struct LawViolation {
    std::string law;
    std::vector<Weight> witness;
    std::string describe() const;
};

/// Checks the semiring axioms on every triple drawn from `sample` plus 0 and
/// 1. An empty result means no violation was found.
std::vector<LawViolation> semiring_check(const Semiring& s, const std::vector<Weight>& sample);

} // namespace effa
