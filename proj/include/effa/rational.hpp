#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace effa {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long n, long d);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses `p/q` or `p` (optional leading sign). Throws InputError.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// `p/q`, or `p` when the denominator is 1.
    std::string str() const;
    /// Decimal rendering with `digits` digits after the point (truncated toward zero).
    std::string decimal(int digits) const;
    double to_double() const { return q_.get_d(); }

    /// 2^-n
    static Rational pow2_inv(unsigned n);

    std::size_t hash() const;

private:
    mpq_class q_;
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace effa

template <>
struct std::hash<effa::Rational> {
    std::size_t operator()(const effa::Rational& r) const noexcept { return r.hash(); }
};
