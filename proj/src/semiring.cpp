#include "effa/semiring.hpp"

#include "effa/error.hpp"

#include <ostream>
#include <sstream>

namespace effa {

bool operator<(const Weight& a, const Weight& b) {
    const int ia = static_cast<int>(a.inf_);
    const int ib = static_cast<int>(b.inf_);
    if (ia != ib) {
        return ia < ib;
    }
    return ia == 0 && a.value_ < b.value_;
}

std::string Weight::str() const {
    switch (inf_) {
    case Inf::pos:
        return "inf";
    case Inf::neg:
        return "-inf";
    case Inf::none:
        break;
    }
    return value_.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

namespace {

bool is_natural(const Weight& w) {
    return w.finite() && w.value().is_integer() && w.value().sign() >= 0;
}

Semiring make_boolean() {
    Semiring s;
    s.name = "boolean";
    s.zero = Weight(0);
    s.one = Weight(1);
    s.add = [](const Weight& a, const Weight& b) {
        return Weight(a.value().is_zero() && b.value().is_zero() ? 0 : 1);
    };
    s.mul = [](const Weight& a, const Weight& b) {
        return Weight(a.value().is_zero() || b.value().is_zero() ? 0 : 1);
    };
    s.add_idempotent = true;
    s.mul_commutative = true;
    return s;
}

Semiring make_rational() {
    Semiring s;
    s.name = "rational";
    s.zero = Weight(0);
    s.one = Weight(1);
    s.add = [](const Weight& a, const Weight& b) { return Weight(a.value() + b.value()); };
    s.mul = [](const Weight& a, const Weight& b) { return Weight(a.value() * b.value()); };
    s.mul_commutative = true;
    return s;
}

// min-plus over N u {inf}: zero = inf absorbs under +.
Semiring make_minplus() {
    Semiring s;
    s.name = "minplus";
    s.zero = Weight::pos_inf();
    s.one = Weight(0);
    s.add = [](const Weight& a, const Weight& b) { return b < a ? b : a; };
    s.mul = [](const Weight& a, const Weight& b) {
        if (!a.finite() || !b.finite()) {
            return Weight::pos_inf();
        }
        return Weight(a.value() + b.value());
    };
    s.add_idempotent = true;
    s.mul_commutative = true;
    return s;
}

Semiring make_maxplus() {
    Semiring s;
    s.name = "maxplus";
    s.zero = Weight::neg_inf();
    s.one = Weight(0);
    s.add = [](const Weight& a, const Weight& b) { return a < b ? b : a; };
    s.mul = [](const Weight& a, const Weight& b) {
        if (!a.finite() || !b.finite()) {
            return Weight::neg_inf();
        }
        return Weight(a.value() + b.value());
    };
    s.add_idempotent = true;
    s.mul_commutative = true;
    return s;
}

} // namespace

bool Semiring::contains(const Weight& w) const {
    if (name == "boolean") {
        return w.finite() && (w.value() == Rational(0) || w.value() == Rational(1));
    }
    if (name == "rational") {
        return w.finite();
    }
    if (name == "minplus") {
        return is_natural(w) || w.infinity() == Weight::Inf::pos;
    }
    if (name == "maxplus") {
        return is_natural(w) || w.infinity() == Weight::Inf::neg;
    }
    return true;
}

Weight Semiring::parse(std::string_view text) const {
    Weight w;
    if (text == "inf") {
        w = Weight::pos_inf();
    } else if (text == "-inf") {
        w = Weight::neg_inf();
    } else if (name == "boolean" && (text == "true" || text == "false")) {
        w = Weight(text == "true" ? 1 : 0);
    } else {
        w = Weight(Rational::parse(text));
    }
    if (!contains(w)) {
        throw InputError("'" + std::string(text) + "' is not an element of the " + name +
                         " semiring");
    }
    return w;
}

SemiringPtr semiring_builtin(std::string_view name) {
    static const SemiringPtr boolean = std::make_shared<const Semiring>(make_boolean());
    static const SemiringPtr rational = std::make_shared<const Semiring>(make_rational());
    static const SemiringPtr minplus = std::make_shared<const Semiring>(make_minplus());
    static const SemiringPtr maxplus = std::make_shared<const Semiring>(make_maxplus());
    if (name == "boolean") {
        return boolean;
    }
    if (name == "rational") {
        return rational;
    }
    if (name == "minplus") {
        return minplus;
    }
    if (name == "maxplus") {
        return maxplus;
    }
    throw ConfigError("unknown semiring '" + std::string(name) + "'");
}

bool same_semiring(const SemiringPtr& a, const SemiringPtr& b) {
    if (a == b) {
        return true;
    }
    return a && b && a->name == b->name;
}

std::string LawViolation::describe() const {
    std::ostringstream os;
    os << law << " fails at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        os << (i ? ", " : "") << witness[i];
    }
    os << ")";
    return os.str();
}

std::vector<LawViolation> semiring_check(const Semiring& s, const std::vector<Weight>& sample) {
    std::vector<Weight> elems;
    auto push_unique = [&](const Weight& w) {
        for (const auto& e : elems) {
            if (s.eq(e, w)) {
                return;
            }
        }
        elems.push_back(w);
    };
    for (const auto& w : sample) {
        push_unique(w);
    }
    push_unique(s.zero);
    push_unique(s.one);

    std::vector<LawViolation> out;
    auto fail = [&](const char* law, std::vector<Weight> w) {
        out.push_back(LawViolation{law, std::move(w)});
    };
    for (const auto& a : elems) {
        if (!s.eq(s.plus(a, s.zero), a) || !s.eq(s.plus(s.zero, a), a)) {
            fail("additive identity", {a});
        }
        if (!s.eq(s.times(a, s.one), a) || !s.eq(s.times(s.one, a), a)) {
            fail("multiplicative identity", {a});
        }
        if (!s.is_zero(s.times(a, s.zero)) || !s.is_zero(s.times(s.zero, a))) {
            fail("zero annihilates", {a});
        }
        if (s.add_idempotent && !s.eq(s.plus(a, a), a)) {
            fail("additive idempotence", {a});
        }
        for (const auto& b : elems) {
            if (!s.eq(s.plus(a, b), s.plus(b, a))) {
                fail("additive commutativity", {a, b});
            }
            if (s.mul_commutative && !s.eq(s.times(a, b), s.times(b, a))) {
                fail("multiplicative commutativity", {a, b});
            }
            for (const auto& c : elems) {
                if (!s.eq(s.plus(s.plus(a, b), c), s.plus(a, s.plus(b, c)))) {
                    fail("additive associativity", {a, b, c});
                }
                if (!s.eq(s.times(s.times(a, b), c), s.times(a, s.times(b, c)))) {
                    fail("multiplicative associativity", {a, b, c});
                }
                if (!s.eq(s.times(a, s.plus(b, c)), s.plus(s.times(a, b), s.times(a, c)))) {
                    fail("left distributivity", {a, b, c});
                }
                if (!s.eq(s.times(s.plus(a, b), c), s.plus(s.times(a, c), s.times(b, c)))) {
                    fail("right distributivity", {a, b, c});
                }
            }
        }
    }
    return out;
}

} // namespace effa
